//! Univariate polynomials over a generic exact coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{LaurentA, Rational};

/// Variable tag of a [`UniPoly`]; polynomials in different variables never mix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    S,
    T,
    Y,
    Z,
    W,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Var::S => "s",
            Var::T => "t",
            Var::Y => "y",
            Var::Z => "z",
            Var::W => "w",
        };
        f.write_str(c)
    }
}

/// Exact coefficient ring usable inside [`UniPoly`].
pub trait Coefficient:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + fmt::Display + fmt::Debug
{
    /// Sign used when printing: `true` if the leading printed sign is `-`.
    fn prints_negative(&self) -> bool;
    /// Whether the coefficient is printed wrapped in parentheses when multiplied.
    fn is_compound(&self) -> bool;
    fn from_i64(n: i64) -> Self;
}

impl Coefficient for Rational {
    fn prints_negative(&self) -> bool {
        num_traits::Signed::is_negative(self)
    }
    fn is_compound(&self) -> bool {
        false
    }
    fn from_i64(n: i64) -> Self {
        super::rat(n)
    }
}

impl Coefficient for LaurentA {
    fn prints_negative(&self) -> bool {
        false
    }
    fn is_compound(&self) -> bool {
        !self.is_zero() && self != &LaurentA::one()
    }
    fn from_i64(n: i64) -> Self {
        LaurentA::from(n)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<C> {
    var: Var,
    coeffs: Vec<C>,
}

impl<C: Coefficient> UniPoly<C> {
    /// Coefficients by ascending degree; trailing zeros are trimmed.
    pub fn new(var: Var, coeffs: Vec<C>) -> Self {
        let mut p = Self { var, coeffs };
        p.trim();
        p
    }

    pub fn zero(var: Var) -> Self {
        Self { var, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, c: C) -> Self {
        Self::new(var, vec![c])
    }

    /// The polynomial `var`.
    pub fn variable(var: Var) -> Self {
        Self::new(var, vec![C::zero(), C::one()])
    }

    pub fn monomial(var: Var, c: C, deg: usize) -> Self {
        let mut coeffs = vec![C::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(var, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, deg: usize) -> C {
        self.coeffs.get(deg).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn checked_add(&self, rhs: &Self) -> crate::Result<Self> {
        self.same_var(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Ok(Self::new(self.var, coeffs))
    }

    pub fn checked_mul(&self, rhs: &Self) -> crate::Result<Self> {
        self.same_var(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Self::new(self.var, coeffs))
    }

    fn same_var(&self, rhs: &Self) -> crate::Result<()> {
        if self.var == rhs.var {
            Ok(())
        } else {
            Err(crate::Error::VariableMismatch(self.var, rhs.var))
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(self.var, C::one()), |acc, _| &acc * self)
    }

    /// Horner evaluation in any ring the coefficients embed into.
    pub fn eval_with<R>(&self, at: &R, embed: impl Fn(&C) -> R) -> R
    where
        R: Clone + Zero + Add<Output = R> + Mul<Output = R>,
    {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc * at.clone() + embed(c))
    }

    /// Composition `self(inner)`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(inner.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(inner.var, c.clone());
        }
        acc
    }
}

impl<'a, C: Coefficient> Add<&'a UniPoly<C>> for &'a UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        self.checked_add(rhs).expect("mixed polynomial variables")
    }
}

impl<'a, C: Coefficient> Sub<&'a UniPoly<C>> for &'a UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        self + &(-rhs.clone())
    }
}

impl<'a, C: Coefficient> Mul<&'a UniPoly<C>> for &'a UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        self.checked_mul(rhs).expect("mixed polynomial variables")
    }
}

impl<C: Coefficient> Neg for UniPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.var, self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<C: Coefficient> fmt::Display for UniPoly<C> {
    /// Descending degree: `s^5 - 5*s^3 + 5*s`; compound coefficients are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match deg {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{deg}", self.var),
            };
            let neg = c.prints_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if mono.is_empty() {
                if mag.is_compound() {
                    write!(f, "({mag})")?;
                } else {
                    write!(f, "{mag}")?;
                }
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else if mag.is_compound() {
                write!(f, "({mag})*{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]({self})", self.var)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn s() -> UniPoly<Rational> {
        UniPoly::variable(Var::S)
    }

    #[test]
    fn zero_is_identity() {
        let f = UniPoly::new(Var::S, vec![rat(3), rat(0), rat(-2)]);
        assert_eq!(&f + &UniPoly::zero(Var::S), f);
    }

    #[test]
    fn mixing_variables_is_an_error() {
        let y = UniPoly::<Rational>::variable(Var::Y);
        assert!(matches!(s().checked_add(&y), Err(crate::Error::VariableMismatch(Var::S, Var::Y))));
        assert!(s().checked_mul(&y).is_err());
    }

    #[test]
    fn compose_and_display() {
        let sq = &s() * &s();
        let shifted = sq.compose(&(&s() + &UniPoly::constant(Var::S, rat(1))));
        assert_eq!(shifted.to_string(), "s^2 + 2*s + 1");
        assert_eq!((-shifted).to_string(), "-s^2 - 2*s - 1");
    }

    #[test]
    fn laurent_coefficients_print_parenthesized() {
        let p = UniPoly::new(Var::Y, vec![LaurentA::delta(), LaurentA::one(), LaurentA::a_pow(2)]);
        assert_eq!(p.to_string(), "(A^2)*y^2 + y + (-A^2 - A^-2)");
    }
}
