//! Graded basis of the skein module of a torus-knot complement and its image
//! among trace functions at `A = -1`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::algebra::{chebyshev, PolyXYZ, Rational, UniPoly, Var};
use crate::charvar::{admissible_pairs, TorusKnotConfig};
use crate::trace::trace_word;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "grade", rename_all = "lowercase")]
pub enum GradedIndex {
    /// `x^m1 P^n y^m2` with `P = T_q(x) = T_p(y)`.
    Deg0 { m1: u32, n: u32, m2: u32 },
    /// The orbit `{(j1, j2), (q - j1, p - j2)}`; `(j1, j2)` is the smaller representative.
    DegK { k: u32, j1: u32, j2: u32 },
}

impl GradedIndex {
    /// Leading degree in the abelian parameter of a degree-zero index.
    pub fn t_degree(&self, cfg: &TorusKnotConfig) -> Option<u32> {
        match *self {
            GradedIndex::Deg0 { m1, n, m2 } => Some(cfg.p * m1 + cfg.p * cfg.q * n + cfg.q * m2),
            GradedIndex::DegK { .. } => None,
        }
    }

    /// The other representative of a degree-k orbit.
    pub fn partner(&self, cfg: &TorusKnotConfig) -> Option<(u32, u32)> {
        match *self {
            GradedIndex::DegK { j1, j2, .. } => Some((cfg.q - j1, cfg.p - j2)),
            GradedIndex::Deg0 { .. } => None,
        }
    }
}

impl std::fmt::Display for GradedIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GradedIndex::Deg0 { m1, n, m2 } => write!(f, "deg0(m1={m1}, n={n}, m2={m2})"),
            GradedIndex::DegK { k, j1, j2 } => write!(f, "deg{k}{{({j1},{j2})}}"),
        }
    }
}

/// Exponent ranges for the degree-zero family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Deg0Ranges {
    /// `m1 < q`, `m2 < p`: a complete residue system modulo `pq`.
    Crt,
    /// `m1 < p`, `m2 < q`, read literally.
    Literal,
}

/// All degree-zero indices with `t_degree <= bound`, sorted by degree.
pub fn deg0_basis_with(cfg: &TorusKnotConfig, bound: u32, ranges: Deg0Ranges) -> Vec<GradedIndex> {
    let (p, q) = (cfg.p, cfg.q);
    let (r1, r2) = match ranges {
        Deg0Ranges::Crt => (q, p),
        Deg0Ranges::Literal => (p, q),
    };
    let mut out = Vec::new();
    for n in 0..=bound / (p * q) {
        for m1 in 0..r1 {
            for m2 in 0..r2 {
                let idx = GradedIndex::Deg0 { m1, n, m2 };
                if idx.t_degree(cfg).unwrap() <= bound {
                    out.push(idx);
                }
            }
        }
    }
    out.sort_by_key(|i| (i.t_degree(cfg), *i));
    out
}

pub fn deg0_basis(cfg: &TorusKnotConfig, bound: u32) -> Vec<GradedIndex> {
    deg0_basis_with(cfg, bound, Deg0Ranges::Crt)
}

/// First pair of indices sharing a leading degree, if any.
pub fn degree_collision(cfg: &TorusKnotConfig, indices: &[GradedIndex]) -> Option<(GradedIndex, GradedIndex, u32)> {
    let mut seen = std::collections::HashMap::new();
    for idx in indices {
        let d = idx.t_degree(cfg)?;
        if let Some(prev) = seen.insert(d, *idx) {
            return Some((prev, *idx, d));
        }
    }
    None
}

/// Orbits of `(j1, j2) -> (q - j1, p - j2)` on `[1, q-1] x [1, p-1]`.
pub fn degk_orbits(cfg: &TorusKnotConfig, k: u32) -> Result<Vec<GradedIndex>> {
    if k == 0 {
        return Err(Error::IndexOutOfRange("degree-k orbits need k >= 1".into()));
    }
    let (p, q) = (cfg.p, cfg.q);
    let mut out = Vec::new();
    for j1 in 1..q {
        for j2 in 1..p {
            let other = (q - j1, p - j2);
            if other == (j1, j2) {
                return Err(Error::Degenerate(format!("({j1},{j2}) is fixed by the rotation")));
            }
            if (j1, j2) < other {
                out.push(GradedIndex::DegK { k, j1, j2 });
            }
        }
    }
    Ok(out)
}

/// The trace function of a basis element at `A = -1`, up to sign.
pub fn basis_to_trace(idx: &GradedIndex, cfg: &TorusKnotConfig) -> PolyXYZ {
    match *idx {
        GradedIndex::Deg0 { m1, n, m2 } => {
            let big_p = compose_x(&chebyshev(cfg.q as usize));
            &(&PolyXYZ::x().pow(m1) * &big_p.pow(n)) * &PolyXYZ::y().pow(m2)
        }
        GradedIndex::DegK { k, j1, j2 } => &PolyXYZ::z().pow(k - 1) * &trace_word(j1, j2),
    }
}

/// `f(s)` with `s` replaced by `x`.
fn compose_x(f: &UniPoly<Rational>) -> PolyXYZ {
    debug_assert_eq!(f.var(), Var::S);
    f.coeffs()
        .iter()
        .enumerate()
        .fold(PolyXYZ::zero(), |acc, (d, c)| &acc + &PolyXYZ::x().pow(d as u32).scale(c))
}

/// `T_q(x) - T_p(y)`, which vanishes on the character variety.
pub fn knot_class_relation(cfg: &TorusKnotConfig) -> PolyXYZ {
    let tq = compose_x(&chebyshev(cfg.q as usize));
    let tp = compose_x(&chebyshev(cfg.p as usize)).swap_xy();
    &tq - &tp
}

/// Rows indexed by degree-k orbits, columns by admissible pairs:
/// `sin(j1 k pi/q) sin(j2 l pi/p)` summed over both orbit representatives.
pub fn sine_matrix(cfg: &TorusKnotConfig, k: u32) -> Result<DMatrix<f64>> {
    let orbits = degk_orbits(cfg, k)?;
    let pairs = admissible_pairs(cfg);
    let (p, q) = (cfg.p as f64, cfg.q as f64);
    let entry = |j1: u32, j2: u32, kk: u32, l: u32| {
        (j1 as f64 * kk as f64 * PI / q).sin() * (j2 as f64 * l as f64 * PI / p).sin()
    };
    Ok(DMatrix::from_fn(orbits.len(), pairs.len(), |r, c| {
        let idx = orbits[r];
        let (j1, j2) = match idx {
            GradedIndex::DegK { j1, j2, .. } => (j1, j2),
            GradedIndex::Deg0 { .. } => unreachable!(),
        };
        let (o1, o2) = idx.partner(cfg).unwrap();
        let pair = pairs[c];
        entry(j1, j2, pair.k, pair.l) + entry(o1, o2, pair.k, pair.l)
    }))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DstReport {
    pub invertible: bool,
    /// Determinant after scaling every row to unit length.
    pub scaled_det: f64,
    pub condition: f64,
}

/// Invertibility of a square matrix, judged after row scaling.
pub fn dst_check(m: &DMatrix<f64>, tol: f64) -> DstReport {
    if !m.is_square() || m.nrows() == 0 {
        return DstReport { invertible: false, scaled_det: 0.0, condition: f64::INFINITY };
    }
    let mut scaled = m.clone();
    for mut row in scaled.row_iter_mut() {
        let norm = row.norm();
        if norm > 0.0 {
            row /= norm;
        }
    }
    let scaled_det = scaled.determinant();
    let sv = scaled.singular_values();
    let (max, min) = (sv.max(), sv.min());
    let condition = if min > 0.0 { max / min } else { f64::INFINITY };
    DstReport { invertible: scaled_det.abs() > tol, scaled_det, condition }
}

pub fn verify_dst(cfg: &TorusKnotConfig, tol: f64) -> Result<DstReport> {
    Ok(dst_check(&sine_matrix(cfg, 1)?, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charvar::CharacterVariety;
    use num_integer::Integer;

    fn cfg(p: u32, q: u32) -> TorusKnotConfig {
        TorusKnotConfig::new(p, q).unwrap()
    }

    #[test]
    fn trefoil_degree_zero() {
        let c = cfg(2, 3);
        let basis = deg0_basis(&c, 5);
        let degrees: Vec<u32> = basis.iter().map(|i| i.t_degree(&c).unwrap()).collect();
        assert_eq!(degrees, vec![0, 2, 3, 4, 5]);
        assert_eq!(basis[0], GradedIndex::Deg0 { m1: 0, n: 0, m2: 0 });
        assert_eq!(basis[1], GradedIndex::Deg0 { m1: 1, n: 0, m2: 0 });
        assert_eq!(basis[2], GradedIndex::Deg0 { m1: 0, n: 0, m2: 1 });
        assert_eq!(basis[4], GradedIndex::Deg0 { m1: 1, n: 0, m2: 1 });
        assert_eq!(basis_to_trace(&basis[0], &c), PolyXYZ::int(1));
    }

    #[test]
    fn literal_ranges_collide() {
        let c = cfg(2, 3);
        let (a, b, d) = degree_collision(&c, &deg0_basis_with(&c, 6, Deg0Ranges::Literal)).unwrap();
        assert_eq!(d, 6);
        assert_eq!([a, b], [GradedIndex::Deg0 { m1: 0, n: 0, m2: 2 }, GradedIndex::Deg0 { m1: 0, n: 1, m2: 0 }]);
    }

    #[test]
    fn crt_ranges_are_injective() {
        for p in 2..=12u32 {
            for q in 2..=12u32 {
                if p == q || p.gcd(&q) != 1 {
                    continue;
                }
                let c = cfg(p, q);
                assert!(degree_collision(&c, &deg0_basis(&c, 4 * p * q)).is_none(), "T({p},{q})");
            }
        }
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(degk_orbits(&cfg(2, 3), 1).unwrap().len(), 1);
        for k in 1..=3 {
            assert_eq!(degk_orbits(&cfg(3, 5), k).unwrap().len(), 4);
        }
        assert_eq!(
            basis_to_trace(&degk_orbits(&cfg(2, 3), 1).unwrap()[0], &cfg(2, 3)),
            PolyXYZ::z()
        );
        assert!(degk_orbits(&cfg(2, 3), 0).is_err());
    }

    #[test]
    fn degk_traces_have_degree_k() {
        let c = cfg(3, 4);
        let cv = CharacterVariety::new(c);
        for k in 1..=3 {
            for idx in degk_orbits(&c, k).unwrap() {
                assert_eq!(cv.degree(&basis_to_trace(&idx, &c)), k as usize, "{idx}");
            }
        }
    }

    #[test]
    fn knot_class_relation_text() {
        assert_eq!(knot_class_relation(&cfg(2, 3)).to_string(), "x^3 - y^2 - 3*x + 2");
    }

    #[test]
    fn sine_matrix_examples() {
        let m = sine_matrix(&cfg(2, 3), 1).unwrap();
        assert_eq!(m.shape(), (1, 1));
        assert!(m[(0, 0)].abs() > 0.1);
        // an even q: the orbit row with j1 = q/2 vanishes on even k
        let c = cfg(3, 4);
        let orbits = degk_orbits(&c, 1).unwrap();
        let m = sine_matrix(&c, 1).unwrap();
        for (r, idx) in orbits.iter().enumerate() {
            if let GradedIndex::DegK { j1: 2, .. } = idx {
                for (col, pair) in admissible_pairs(&c).iter().enumerate() {
                    if pair.k % 2 == 0 {
                        assert!(m[(r, col)].abs() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn duplicated_row_is_singular() {
        let c = cfg(3, 5);
        assert!(verify_dst(&c, 1e-8).unwrap().invertible);
        let mut m = sine_matrix(&c, 1).unwrap();
        let row = m.row(0).into_owned();
        m.set_row(1, &row);
        let r = dst_check(&m, 1e-8);
        assert!(!r.invertible);
        assert!(r.condition > 1e8);
    }
}
