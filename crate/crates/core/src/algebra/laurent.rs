//! Laurent polynomials in the framing variable `A` with big-integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element of `Z[A, A^-1]`.
///
/// Stored densely from the lowest nonzero exponent upward; both ends of
/// `coeffs` are nonzero and the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentA {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl LaurentA {
    pub fn monomial(coeff: impl Into<BigInt>, exp: i32) -> Self {
        Self::from_dense(exp, vec![coeff.into()])
    }

    /// `A^exp`
    pub fn a_pow(exp: i32) -> Self {
        Self::monomial(1, exp)
    }

    /// The contractible loop value `-A^2 - A^-2`.
    pub fn delta() -> Self {
        Self::from_terms([(2, -1), (-2, -1)])
    }

    /// The first Reidemeister move factor `(-A^3)^sign`.
    pub fn kink(sign: i32) -> Self {
        let e = 3 * sign;
        Self::monomial(if sign.rem_euclid(2) == 1 { -1 } else { 1 }, e)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out += Self::monomial(c, e);
        }
        out
    }

    pub fn from_dense(low: i32, coeffs: Vec<BigInt>) -> Self {
        let mut out = Self { low, coeffs };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        let idx = exp - self.low;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// If this is a unit `±A^m` of the ring, returns `(sign, m)`.
    pub fn as_unit(&self) -> Option<(i32, i32)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let c = &self.coeffs[0];
        if c.abs().is_one() {
            Some((if c.is_positive() { 1 } else { -1 }, self.low))
        } else {
            None
        }
    }

    /// Inverse of a unit `±A^m`; `None` for non-units.
    pub fn unit_inverse(&self) -> Option<Self> {
        self.as_unit().map(|(s, m)| Self::monomial(s, -m))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_dense(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn shift(&self, by: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + by, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Evaluates at `A = value`, which must be nonzero when negative exponents occur.
    pub fn eval_i64(&self, value: i64) -> BigInt {
        let v = BigInt::from(value);
        self.terms().fold(BigInt::zero(), |acc, (e, c)| {
            if e >= 0 {
                acc + c * num_traits::pow(v.clone(), e as usize)
            } else {
                let d = num_traits::pow(v.clone(), (-e) as usize);
                assert!(value.abs() == 1, "negative powers only evaluated at units");
                acc + c * d
            }
        })
    }

    fn add_scaled(&mut self, other: &Self, sign: i32) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if sign > 0 { other.clone() } else { -other.clone() };
            return;
        }
        let low = self.low.min(other.low);
        let high = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.low - low) as usize + i];
            if sign > 0 {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
        *self = Self::from_dense(low, coeffs);
    }
}

impl Zero for LaurentA {
    fn zero() -> Self {
        Self { low: 0, coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentA {
    fn one() -> Self {
        Self::monomial(1, 0)
    }
}

impl From<i64> for LaurentA {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl Add for LaurentA {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.add_scaled(&rhs, 1);
        self
    }
}

impl<'a> Add<&'a LaurentA> for &'a LaurentA {
    type Output = LaurentA;
    fn add(self, rhs: &LaurentA) -> LaurentA {
        let mut out = self.clone();
        out.add_scaled(rhs, 1);
        out
    }
}

impl AddAssign for LaurentA {
    fn add_assign(&mut self, rhs: Self) {
        self.add_scaled(&rhs, 1);
    }
}

impl AddAssign<&LaurentA> for LaurentA {
    fn add_assign(&mut self, rhs: &LaurentA) {
        self.add_scaled(rhs, 1);
    }
}

impl Sub for LaurentA {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self.add_scaled(&rhs, -1);
        self
    }
}

impl<'a> Sub<&'a LaurentA> for &'a LaurentA {
    type Output = LaurentA;
    fn sub(self, rhs: &LaurentA) -> LaurentA {
        let mut out = self.clone();
        out.add_scaled(rhs, -1);
        out
    }
}

impl Neg for LaurentA {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> Mul<&'a LaurentA> for &'a LaurentA {
    type Output = LaurentA;
    fn mul(self, rhs: &LaurentA) -> LaurentA {
        if self.is_zero() || rhs.is_zero() {
            return LaurentA::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentA::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentA {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl fmt::Display for LaurentA {
    /// Terms in descending exponent order, e.g. `-A^2 + 3 - A^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<_> = self.terms().collect();
        for (n, (e, c)) in terms.iter().rev().enumerate() {
            let mono = match e {
                0 => String::new(),
                1 => "A".to_string(),
                _ => format!("A^{e}"),
            };
            super::write_term(f, n == 0, *c, &mono)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentA({self})")
    }
}

impl std::str::FromStr for LaurentA {
    type Err = crate::Error;

    /// Parses the output of `Display`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || crate::Error::Parse(format!("invalid Laurent polynomial: {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            // a term ends at the next '+' or a '-' that does not follow '^'
            let bytes = body.as_bytes();
            let mut end = bytes.len();
            for i in 1..bytes.len() {
                if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                    end = i;
                    break;
                }
            }
            let term = &body[..end];
            rest = &body[end..];
            let (coeff, exp) = match term.split_once('A') {
                None => (term.parse::<BigInt>().map_err(|_| bad())?, 0),
                Some((c, e)) => {
                    let c = c.trim_end_matches('*');
                    let coeff = if c.is_empty() { BigInt::one() } else { c.parse().map_err(|_| bad())? };
                    let exp = if e.is_empty() {
                        1
                    } else {
                        e.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
                    };
                    (coeff, exp)
                }
            };
            out += Self::monomial(coeff * sign, exp);
        }
        Ok(out)
    }
}
