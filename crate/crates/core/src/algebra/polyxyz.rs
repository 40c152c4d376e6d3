//! Sparse polynomials in the trace coordinates `x`, `y`, `z`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat, Rational, UniPoly};

/// Exponent triple ordered graded-lexicographically, largest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exponent(pub u32, pub u32, pub u32);

impl Exponent {
    fn total(&self) -> u32 {
        self.0 + self.1 + self.2
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .total()
            .cmp(&self.total())
            .then_with(|| (other.0, other.1, other.2).cmp(&(self.0, self.1, self.2)))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of `Q[x, y, z]`; terms iterate in canonical graded-lex order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyXYZ {
    terms: BTreeMap<Exponent, Rational>,
}

impl PolyXYZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0, 0)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn monomial(c: Rational, i: u32, j: u32, k: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponent(i, j, k), c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(rat(1), 1, 0, 0)
    }

    pub fn y() -> Self {
        Self::monomial(rat(1), 0, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(rat(1), 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    pub fn degree_z(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.2).max()
    }

    /// Coefficients of `z^0, z^1, ...` as polynomials in `x, y`.
    pub fn z_coefficients(&self) -> Vec<PolyXYZ> {
        let len = self.degree_z().map_or(0, |d| d as usize + 1);
        let mut out = vec![PolyXYZ::zero(); len];
        for (e, c) in &self.terms {
            out[e.2 as usize].add_term(Exponent(e.0, e.1, 0), c.clone());
        }
        out
    }

    /// Exchanges `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(Exponent(e.1, e.0, e.2), c.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::int(1), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    /// Evaluates in any commutative ring receiving the rational coefficients.
    pub fn eval_with<R>(&self, x: &R, y: &R, z: &R, embed: impl Fn(&Rational) -> R) -> R
    where
        R: Clone + Zero + One + Add<Output = R> + Mul<Output = R>,
    {
        let pow = |base: &R, n: u32| (0..n).fold(R::one(), |acc, _| acc * base.clone());
        self.terms.iter().fold(R::zero(), |acc, (e, c)| {
            acc + embed(c) * pow(x, e.0) * pow(y, e.1) * pow(z, e.2)
        })
    }
}

/// Composition `f(sx, sy, sz)` with univariate polynomials in one shared variable.
pub fn substitute(
    f: &PolyXYZ,
    sx: &UniPoly<Rational>,
    sy: &UniPoly<Rational>,
    sz: &UniPoly<Rational>,
) -> crate::Result<UniPoly<Rational>> {
    let var = sx.var();
    sx.checked_add(sy)?;
    sx.checked_add(sz)?;
    let one = UniPoly::constant(var, rat(1));
    let powers = |base: &UniPoly<Rational>, max: Option<u32>| {
        let mut v = vec![one.clone()];
        for _ in 0..max.unwrap_or(0) {
            let next = v.last().unwrap() * base;
            v.push(next);
        }
        v
    };
    let px = powers(sx, f.degree_x());
    let py = powers(sy, f.degree_y());
    let pz = powers(sz, f.degree_z());
    let mut acc = UniPoly::zero(var);
    for (e, c) in f.terms() {
        let mono = &(&px[e.0 as usize] * &py[e.1 as usize]) * &pz[e.2 as usize];
        acc = &acc + &mono.scale(c);
    }
    Ok(acc)
}

impl<'a> Add<&'a PolyXYZ> for &'a PolyXYZ {
    type Output = PolyXYZ;
    fn add(self, rhs: &PolyXYZ) -> PolyXYZ {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a PolyXYZ> for &'a PolyXYZ {
    type Output = PolyXYZ;
    fn sub(self, rhs: &PolyXYZ) -> PolyXYZ {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a PolyXYZ> for &'a PolyXYZ {
    type Output = PolyXYZ;
    fn mul(self, rhs: &PolyXYZ) -> PolyXYZ {
        let mut out = PolyXYZ::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(Exponent(a.0 + b.0, a.1 + b.1, a.2 + b.2), ca * cb);
            }
        }
        out
    }
}

impl Neg for PolyXYZ {
    type Output = PolyXYZ;
    fn neg(self) -> PolyXYZ {
        PolyXYZ { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl fmt::Display for PolyXYZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            for (name, d) in [("x", e.0), ("y", e.1), ("z", e.2)] {
                match d {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{d}")),
                }
            }
            super::write_term(f, n == 0, c, &factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyXYZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyXYZ({self})")
    }
}
