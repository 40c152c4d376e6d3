//! Graded basis of the skein module of a torus-knot complement, its trace
//! image at `A = -1`, and the verification report.

mod graded;
mod report;

pub use graded::{
    basis_to_trace, deg0_basis, deg0_basis_with, degk_orbits, degree_collision, dst_check, knot_class_relation,
    sine_matrix, verify_dst, Deg0Ranges, DstReport, GradedIndex,
};
pub use report::{verify_theorem, CheckResult, VerificationReport, VerifyOptions, DEFAULT_SEED};
