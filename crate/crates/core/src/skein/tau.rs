//! The rotation collar `tau`.
//!
//! `wrap(g, m)` stacks a collar outside `g`: every strand moves one position
//! up, and the strand at the last endpoint is carried along a tail that runs
//! around the annulus `m` times before reaching position `0`. The tail passes
//! over every strand just before the seam and under every strand just after it.

use super::tangle::{AnnularTangle, Slice};
use crate::{Error, Result};

/// Pushes one slice of the wrapped tangle through the tail strands at both ends.
fn translate(slice: Slice, n: usize, out: &mut Vec<Slice>) {
    match slice {
        Slice::Crossing { pos, sign } if pos + 1 == n => out.extend([
            Slice::crossing(0, -1),
            Slice::crossing(n, -1),
            Slice::crossing(n + 1, sign),
            Slice::crossing(0, 1),
            Slice::crossing(n, 1),
        ]),
        Slice::Crossing { pos, sign } => out.push(Slice::crossing(pos + 1, sign)),
        Slice::Cup { pos } if pos == n + 1 => {
            out.extend([Slice::cup(n + 3), Slice::crossing(0, 1), Slice::crossing(n + 2, 1)])
        }
        Slice::Cup { pos } => out.push(Slice::cup(pos + 1)),
        Slice::Cap { pos } if pos + 1 == n => {
            out.extend([Slice::crossing(0, -1), Slice::crossing(n, -1), Slice::cap(n + 1)])
        }
        Slice::Cap { pos } => out.push(Slice::cap(pos + 1)),
    }
}

/// Rotates the endpoints of a closed tangle by one step, the moved strand
/// winding `turns` times around the annulus.
pub fn wrap(g: &AnnularTangle, turns: usize) -> Result<AnnularTangle> {
    let e = g.endpoints;
    if g.validate()? != 0 {
        return Err(Error::MalformedTangle("only closed tangles can be rotated".into()));
    }
    if e == 0 || turns == 0 {
        return Err(Error::MalformedTangle(format!("cannot wrap {e} endpoints {turns} times")));
    }
    let mut out = vec![Slice::cup(e)];
    let mut n = e;
    for s in &g.slices {
        translate(*s, n, &mut out);
        n = s.apply(n)?;
    }
    for _ in 1..turns {
        out.extend([Slice::cup(3), Slice::cap(0), Slice::crossing(0, 1)]);
    }
    out.push(Slice::cap(1));
    Ok(AnnularTangle::new(e, out))
}

/// Framing correction of the collar: one negative kink on the moving strand.
const COLLAR_KINK: [Slice; 3] = [Slice::Cup { pos: 1 }, Slice::Crossing { pos: 0, sign: -1 }, Slice::Cap { pos: 1 }];

/// The rotation `tau` for a solid torus whose framing curve has slope `p`:
/// the moving strand follows the framing curve once, and the collar carries
/// the kink that makes `tau^{2k}` the identity on the quotient.
pub fn tau(g: &AnnularTangle, p: usize) -> Result<AnnularTangle> {
    let mut out = wrap(g, p)?;
    let last = out.slices.len() - 1;
    out.slices.splice(last..last, COLLAR_KINK);
    Ok(out)
}
