//! Crossingless multicurves in the annulus and formal combinations of them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::tangle::{AnnularTangle, Slice};
use crate::algebra::LaurentA;
use crate::{Error, Result};

/// An arc between outer endpoints `a < b`.
///
/// `winding` counts signed seam crossings travelling from `a` to `b`; it is 1
/// when the arc goes around the hole (the disc it cuts off contains the seam)
/// and 0 when it is parallel to the boundary between `a` and `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc {
    pub a: u16,
    pub b: u16,
    pub winding: i8,
}

/// Isotopy class of a multicurve without contractible components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multicurve {
    arcs: Vec<Arc>,
    core_loops: u32,
}

impl Multicurve {
    /// Builds and checks a multicurve. Arcs may be given in any orientation.
    pub fn new(arcs: impl IntoIterator<Item = Arc>, core_loops: u32) -> Result<Self> {
        let mut arcs: Vec<Arc> = arcs
            .into_iter()
            .map(|arc| {
                if arc.a <= arc.b {
                    arc
                } else {
                    Arc { a: arc.b, b: arc.a, winding: -arc.winding }
                }
            })
            .collect();
        arcs.sort();
        let mc = Self { arcs, core_loops };
        mc.check_planar().map_err(|detail| Error::NonPlanar { slice: usize::MAX, detail })?;
        Ok(mc)
    }

    pub fn empty() -> Self {
        Self { arcs: Vec::new(), core_loops: 0 }
    }

    /// `n` parallel copies of the core, with no endpoints.
    pub fn core(n: u32) -> Self {
        Self { arcs: Vec::new(), core_loops: n }
    }

    /// All `k` arcs around the hole, nested, plus `m` core loops.
    pub fn w_power(k: usize, m: u32) -> Self {
        let n = 2 * k as u16;
        let arcs = (0..k as u16).map(|j| Arc { a: j, b: n - 1 - j, winding: 1 }).collect();
        Self { arcs, core_loops: m }
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn core_loops(&self) -> u32 {
        self.core_loops
    }

    pub fn num_endpoints(&self) -> usize {
        2 * self.arcs.len()
    }

    pub fn has_boundary_parallel_arc(&self) -> bool {
        self.arcs.iter().any(|a| a.winding == 0)
    }

    pub fn with_extra_loops(&self, n: u32) -> Self {
        Self { arcs: self.arcs.clone(), core_loops: self.core_loops + n }
    }

    fn check_planar(&self) -> std::result::Result<(), String> {
        let mut seen = vec![false; self.num_endpoints()];
        for arc in &self.arcs {
            if arc.winding != 0 && arc.winding != 1 {
                return Err(format!("arc {arc:?} winds more than once"));
            }
            for e in [arc.a, arc.b] {
                let slot = seen
                    .get_mut(e as usize)
                    .ok_or_else(|| format!("endpoint {e} out of range"))?;
                if std::mem::replace(slot, true) {
                    return Err(format!("endpoint {e} used twice"));
                }
            }
        }
        for (i, s) in self.arcs.iter().enumerate() {
            for t in &self.arcs[i + 1..] {
                let inside = |x: u16, arc: &Arc| arc.a < x && x < arc.b;
                if inside(t.a, s) != inside(t.b, s) {
                    return Err(format!("arcs {s:?} and {t:?} interleave"));
                }
                let nested = inside(t.a, s) || inside(s.a, t);
                if s.winding == 1 && t.winding == 1 && !nested {
                    return Err(format!("arcs {s:?} and {t:?} both go around the hole"));
                }
                if (s.winding == 0 && t.winding == 1 && inside(t.a, s))
                    || (t.winding == 0 && s.winding == 1 && inside(s.a, t))
                {
                    return Err("an arc around the hole sits inside a boundary-parallel arc".to_string());
                }
            }
        }
        Ok(())
    }

    /// A crossingless slice word presenting this multicurve.
    pub fn to_tangle(&self) -> AnnularTangle {
        let n = self.num_endpoints();
        let mut partner = vec![(0u16, 0i8); n];
        for arc in &self.arcs {
            partner[arc.a as usize] = (arc.b, arc.winding);
            partner[arc.b as usize] = (arc.a, arc.winding);
        }
        let mut cur: Vec<u16> = (0..n as u16).collect();
        let mut slices = Vec::new();
        // boundary-parallel arcs, innermost first
        'outer: loop {
            for i in 0..cur.len().saturating_sub(1) {
                let (other, w) = partner[cur[i] as usize];
                if w == 0 && other == cur[i + 1] {
                    slices.push(Slice::cap(i));
                    cur.drain(i..i + 2);
                    continue 'outer;
                }
            }
            break;
        }
        // the arcs around the hole are nested with the outermost across the seam
        while !cur.is_empty() {
            let last = cur.len() - 1;
            debug_assert_eq!(partner[cur[0] as usize].0, cur[last]);
            slices.push(Slice::cap(last));
            cur.pop();
            cur.remove(0);
        }
        for _ in 0..self.core_loops {
            slices.push(Slice::cup(0));
            slices.push(Slice::cap(1));
        }
        AnnularTangle::new(n, slices)
    }
}

impl fmt::Display for Multicurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .arcs
            .iter()
            .map(|a| format!("({},{}){}", a.a, a.b, if a.winding == 1 { "~" } else { "" }))
            .collect();
        write!(f, "[{}]", parts.join(" "))?;
        if self.core_loops > 0 {
            write!(f, "y^{}", self.core_loops)?;
        }
        Ok(())
    }
}

/// A `Z[A^±1]`-linear combination of multicurves: an element of `S(T, 2k)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SkeinElement {
    terms: BTreeMap<Multicurve, LaurentA>,
}

impl SkeinElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_multicurve(mc: Multicurve) -> Self {
        Self::from_term(mc, LaurentA::from(1))
    }

    pub fn from_term(mc: Multicurve, c: LaurentA) -> Self {
        let mut out = Self::zero();
        out.add_term(mc, c);
        out
    }

    pub fn add_term(&mut self, mc: Multicurve, c: LaurentA) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mc) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multicurve, &LaurentA)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mc: &Multicurve) -> LaurentA {
        self.terms.get(mc).cloned().unwrap_or_else(LaurentA::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentA) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Places an element of `S(T, 0)` radially inside this one.
    pub fn stack(&self, inner: &SkeinElement) -> Result<SkeinElement> {
        let mut out = Self::zero();
        for (m2, c2) in &inner.terms {
            if m2.num_endpoints() != 0 {
                return Err(Error::BoundaryMismatch(format!("inner element has endpoints: {m2}")));
            }
            for (m1, c1) in &self.terms {
                out.add_term(m1.with_extra_loops(m2.core_loops), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Coefficients of `y^0, y^1, ...` for an element of `S(T, 0)`.
    pub fn as_core_polynomial(&self) -> Result<Vec<LaurentA>> {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            if m.num_endpoints() != 0 {
                return Err(Error::BoundaryMismatch(format!("{m} is not a closed multicurve")));
            }
            let d = m.core_loops as usize;
            if out.len() <= d {
                out.resize(d + 1, LaurentA::zero());
            }
            out[d] += c;
        }
        Ok(out)
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(m, c)| TermRecord {
                matching: m.arcs.iter().map(|a| [a.a, a.b]).collect(),
                windings: m.arcs.iter().map(|a| a.winding).collect(),
                core_loops: m.core_loops,
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<Self> {
        let mut out = Self::zero();
        for r in records {
            if r.matching.len() != r.windings.len() {
                return Err(Error::Parse("matching and windings differ in length".into()));
            }
            let arcs = r.matching.iter().zip(&r.windings).map(|(m, w)| Arc { a: m[0], b: m[1], winding: *w });
            out.add_term(Multicurve::new(arcs, r.core_loops)?, r.coeff.parse()?);
        }
        Ok(out)
    }
}

/// Serialized form of one term of a [`SkeinElement`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub matching: Vec<[u16; 2]>,
    pub windings: Vec<i8>,
    pub core_loops: u32,
    pub coeff: String,
}

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}
