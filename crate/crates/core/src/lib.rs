//! Kauffman bracket skein modules of torus knot complements.
//!
//! The crate builds, instance by instance, the graded basis of the skein
//! module of `S^3 \ T(p,q)` and compares it with the coordinate ring of the
//! SL2 character variety of the torus knot group `<u, v | u^q = v^p>`.
//!
//! * [`algebra`]: Laurent polynomials in `A`, univariate and trivariate polynomials,
//!   Chebyshev polynomials and exact cyclotomic arithmetic.
//! * [`charvar`]: admissible pairs, components and the degree filtration.
//! * [`trace`]: `tr(u^i v^j)` by recursion, generating function and a numeric oracle.
//! * [`skein`]: the annular state-sum engine, the rotation operator and the `e^k_j` basis.
//! * [`assembly`]: graded basis indices, the sine matrix and the verification report.

pub mod algebra;
pub mod assembly;
pub mod charvar;
pub mod cli;
mod error;
pub mod skein;
pub mod trace;

pub use error::{Error, Result};
