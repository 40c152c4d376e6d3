//! Kauffman bracket skein modules of a solid torus relative to `2k` boundary points.

mod basis;
mod multicurve;
mod quotient;
mod resolve;
mod tangle;
mod tau;

pub use basis::{expand_l, framing_curve, make_e0j, make_ekj, EkBasis};
pub use multicurve::{Arc, Multicurve, SkeinElement, TermRecord};
pub use quotient::{
    identity_matrix, mat_mul, mat_pow, mat_vec, raw_coordinates, z_diagram, LaurentMatrix, QuotientSpace,
};
pub use resolve::{compose_with_element, resolve, MAX_CROSSINGS};
pub use tangle::{AnnularTangle, Slice};
pub use tau::{tau, wrap};
