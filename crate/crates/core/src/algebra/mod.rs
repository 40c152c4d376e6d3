//! Exact coefficient rings and polynomial arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

mod chebyshev;
mod cyclotomic;
mod laurent;
mod polyxyz;
mod unipoly;

pub use chebyshev::{chebyshev, chebyshev_second_kind};
pub use cyclotomic::{CycloElem, CycloField};
pub use laurent::LaurentA;
pub use polyxyz::{substitute, PolyXYZ};
pub use unipoly::{Coefficient, UniPoly, Var};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Writes one signed term of a sum: ` - 3*x^2`, `x`, `-1`, ...
pub(crate) fn write_term<C>(f: &mut fmt::Formatter<'_>, first: bool, coeff: &C, mono: &str) -> fmt::Result
where
    C: fmt::Display + Signed + One + Clone,
{
    let neg = coeff.is_negative();
    let mag = coeff.abs();
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if mono.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{mag}*{mono}")
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    })
}

