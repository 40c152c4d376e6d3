use thiserror::Error;

use crate::algebra::Var;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials in different variables: {0} and {1}")]
    VariableMismatch(Var, Var),

    #[error("invalid torus knot parameters p={p}, q={q}: {reason}")]
    InvalidConfig { p: u32, q: u32, reason: &'static str },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("malformed tangle: {0}")]
    MalformedTangle(String),

    #[error("non-planar state at slice {slice}: {detail}")]
    NonPlanar { slice: usize, detail: String },

    #[error("diagram has {crossings} crossings, state-sum limit is {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },

    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),

    #[error("relation leading coefficient is not a unit: {0}")]
    NonUnitLeading(String),

    #[error("degenerate representation: {0}")]
    Degenerate(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
