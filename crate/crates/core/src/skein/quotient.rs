//! The quotient `S'(T, 2k)` by multicurves with a boundary-parallel arc.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::Zero;

use super::multicurve::{Arc, Multicurve, SkeinElement};
use super::resolve::resolve;
use super::tau::tau;
use crate::algebra::LaurentA;
use crate::{Error, Result};

/// The diagram with `k - 1` arcs around the hole, one boundary-parallel arc
/// on the last two endpoints, and `n` core loops. It vanishes in the quotient.
pub fn z_diagram(k: usize, n: u32) -> Multicurve {
    let last = 2 * k as u16 - 1;
    let mut arcs: Vec<Arc> = (0..k as u16 - 1).map(|j| Arc { a: j, b: last - 2 - j, winding: 1 }).collect();
    arcs.push(Arc { a: last - 1, b: last, winding: 0 });
    Multicurve::new(arcs, n).expect("z diagram is planar")
}

/// Coordinates on `w^0, w^1, ...` after discarding every multicurve with a
/// boundary-parallel arc. No degree reduction happens here.
pub fn raw_coordinates(el: &SkeinElement, k: usize) -> Result<Vec<LaurentA>> {
    let mut out = Vec::new();
    for (mc, c) in el.terms() {
        if mc.num_endpoints() != 2 * k {
            return Err(Error::BoundaryMismatch(format!("{mc} does not have {} endpoints", 2 * k)));
        }
        if mc.has_boundary_parallel_arc() {
            continue;
        }
        let m = mc.core_loops();
        if *mc != Multicurve::w_power(k, m) {
            return Err(Error::Degenerate(format!("unexpected multicurve {mc}")));
        }
        let m = m as usize;
        if out.len() <= m {
            out.resize(m + 1, LaurentA::zero());
        }
        out[m] += c;
    }
    trim(&mut out);
    Ok(out)
}

fn trim(v: &mut Vec<LaurentA>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// `S'(T, 2k)` for the solid torus whose framing curve has slope `p`.
pub struct QuotientSpace {
    k: usize,
    p: usize,
    relations: Mutex<HashMap<u32, Vec<LaurentA>>>,
}

impl QuotientSpace {
    pub fn new(k: usize, p: usize) -> Result<Self> {
        if k == 0 || p < 2 {
            return Err(Error::IndexOutOfRange(format!("quotient needs k >= 1 and p >= 2, got k={k}, p={p}")));
        }
        Ok(Self { k, p, relations: Mutex::new(HashMap::new()) })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Rank of the quotient.
    pub fn rank(&self) -> usize {
        self.p - 1
    }

    /// The relation obtained by rotating the `n`-th z diagram, as raw
    /// coordinates. Its degree is `n + p - 1` with a unit leading coefficient.
    pub fn relation(&self, n: u32) -> Result<Vec<LaurentA>> {
        if let Some(r) = self.relations.lock().unwrap().get(&n) {
            return Ok(r.clone());
        }
        let tangle = tau(&z_diagram(self.k, n).to_tangle(), self.p)?;
        let rel = raw_coordinates(&resolve(&tangle)?, self.k)?;
        let expected = n as usize + self.p - 1;
        if rel.len() != expected + 1 {
            return Err(Error::Degenerate(format!(
                "relation {n} has degree {} instead of {expected}",
                rel.len() as isize - 1
            )));
        }
        if rel[expected].as_unit().is_none() {
            return Err(Error::NonUnitLeading(format!("relation {n}: leading coefficient {}", rel[expected])));
        }
        self.relations.lock().unwrap().insert(n, rel.clone());
        Ok(rel)
    }

    /// Rewrites raw coordinates into the basis `w^0, ..., w^{p-2}`.
    pub fn reduce(&self, raw: &[LaurentA]) -> Result<Vec<LaurentA>> {
        let mut v = raw.to_vec();
        let top = self.rank();
        while v.len() > top {
            let d = v.len() - 1;
            let c = v.pop().unwrap();
            if !c.is_zero() {
                let rel = self.relation((d - top) as u32)?;
                let lead_inv = rel[d].unit_inverse().expect("checked unit");
                let factor = &c * &lead_inv;
                for (i, r) in rel[..d].iter().enumerate() {
                    v[i] = &v[i] - &(r * &factor);
                }
            }
        }
        v.resize(top, LaurentA::zero());
        Ok(v)
    }

    /// Coordinates of an element of `S(T, 2k)` in the basis `w^m`.
    pub fn project(&self, el: &SkeinElement) -> Result<Vec<LaurentA>> {
        self.reduce(&raw_coordinates(el, self.k)?)
    }
}

/// Square matrix over `Z[A^±1]`, stored by rows.
pub type LaurentMatrix = Vec<Vec<LaurentA>>;

pub fn identity_matrix(n: usize) -> LaurentMatrix {
    (0..n).map(|i| (0..n).map(|j| LaurentA::from((i == j) as i64)).collect()).collect()
}

pub fn mat_mul(a: &LaurentMatrix, b: &LaurentMatrix) -> LaurentMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(LaurentA::zero(), |s, t| s + &row[t] * &b[t][j]))
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &LaurentMatrix, v: &[LaurentA]) -> Vec<LaurentA> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(LaurentA::zero(), |s, (x, y)| s + x * y))
        .collect()
}

pub fn mat_pow(a: &LaurentMatrix, n: u32) -> LaurentMatrix {
    (0..n).fold(identity_matrix(a.len()), |acc, _| mat_mul(&acc, a))
}

impl QuotientSpace {
    /// Matrix of `tau` on the basis `w^m`; column `m` is the image of `w^m`.
    pub fn tau_matrix(&self) -> Result<LaurentMatrix> {
        let r = self.rank();
        let mut cols = Vec::with_capacity(r);
        for m in 0..r {
            let tangle = tau(&Multicurve::w_power(self.k, m as u32).to_tangle(), self.p)?;
            cols.push(self.project(&resolve(&tangle)?)?);
        }
        Ok((0..r).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
    }
}
