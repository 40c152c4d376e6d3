//! Slice-word presentation of banded tangles in a solid torus.
//!
//! The solid torus is an annulus times an interval, projected onto the
//! annulus. A slice word reads the diagram radially from the outer boundary
//! circle (where the `2k` marked endpoints sit) towards the inner one. At each
//! level the strands occupy cyclically ordered positions `0..n`, and the seam
//! sits between position `n - 1` and position `0`.
//!
//! * `crossing(i, sign)` swaps positions `i` and `i + 1 (mod n)`; with
//!   `sign = +1` the strand coming from position `i` passes over.
//! * `cup(i)` creates a new pair at positions `i` and `i + 1 (mod n + 2)`.
//! * `cap(i)` joins the strands at positions `i` and `i + 1 (mod n)`.
//!
//! An index whose pair wraps around (`i = n - 1` for crossings and caps,
//! `i = n + 1` for cups) spans the seam.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Slice {
    Crossing { pos: usize, sign: i8 },
    Cup { pos: usize },
    Cap { pos: usize },
}

impl Slice {
    pub fn crossing(pos: usize, sign: i8) -> Self {
        Slice::Crossing { pos, sign }
    }

    pub fn cup(pos: usize) -> Self {
        Slice::Cup { pos }
    }

    pub fn cap(pos: usize) -> Self {
        Slice::Cap { pos }
    }

    /// Strand count after applying this slice to `n` strands.
    pub fn apply(&self, n: usize) -> Result<usize> {
        let bad = |msg: String| Err(Error::MalformedTangle(msg));
        match *self {
            Slice::Crossing { pos, sign } => {
                if sign != 1 && sign != -1 {
                    return bad(format!("crossing sign must be +1 or -1, got {sign}"));
                }
                if n < 2 || pos >= n {
                    return bad(format!("crossing at {pos} with {n} strands"));
                }
                Ok(n)
            }
            Slice::Cup { pos } => {
                if pos > n + 1 {
                    return bad(format!("cup at {pos} with {n} strands"));
                }
                Ok(n + 2)
            }
            Slice::Cap { pos } => {
                if n < 2 || pos >= n {
                    return bad(format!("cap at {pos} with {n} strands"));
                }
                Ok(n - 2)
            }
        }
    }

    /// Whether the slice acts across the seam when applied to `n` strands.
    pub fn spans_seam(&self, n: usize) -> bool {
        match *self {
            Slice::Crossing { pos, .. } | Slice::Cap { pos } => pos + 1 == n,
            Slice::Cup { pos } => pos == n + 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnularTangle {
    /// Number of marked points on the outer boundary.
    pub endpoints: usize,
    pub slices: Vec<Slice>,
    #[serde(default, skip_serializing_if = "serde_json::Map::is_empty")]
    pub meta: serde_json::Map<String, serde_json::Value>,
}

impl AnnularTangle {
    pub fn new(endpoints: usize, slices: Vec<Slice>) -> Self {
        Self { endpoints, slices, meta: Default::default() }
    }

    /// The trivial tangle on `n` radial strands.
    pub fn identity(n: usize) -> Self {
        Self::new(n, Vec::new())
    }

    /// Checks the slice word and returns the strand count at the inner boundary.
    pub fn validate(&self) -> Result<usize> {
        if !self.endpoints.is_multiple_of(2) {
            return Err(Error::MalformedTangle(format!("odd endpoint count {}", self.endpoints)));
        }
        self.slices.iter().enumerate().try_fold(self.endpoints, |n, (idx, s)| {
            s.apply(n).map_err(|e| Error::MalformedTangle(format!("slice {idx}: {e}")))
        })
    }

    /// Whether every strand ends on the outer boundary.
    pub fn is_closed(&self) -> Result<bool> {
        self.validate().map(|n| n == 0)
    }

    pub fn num_crossings(&self) -> usize {
        self.slices.iter().filter(|s| matches!(s, Slice::Crossing { .. })).count()
    }

    /// Stacks `inner` radially inside `self`.
    pub fn compose(&self, inner: &AnnularTangle) -> Result<AnnularTangle> {
        let n = self.validate()?;
        inner.validate()?;
        if n != inner.endpoints {
            return Err(Error::BoundaryMismatch(format!(
                "outer tangle ends with {n} strands, inner tangle starts with {}",
                inner.endpoints
            )));
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&inner.slices);
        Ok(AnnularTangle::new(self.endpoints, slices))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let tg: AnnularTangle = serde_json::from_str(text)?;
        tg.validate()?;
        Ok(tg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tangle serializes")
    }
}
