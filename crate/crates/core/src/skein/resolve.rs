//! Kauffman bracket state sum over the crossings of a slice word.
//!
//! A crossing with sign `s` resolves as `A^s * (identity) + A^-s * (cap; cup)`,
//! and every contractible loop contributes `delta = -A^2 - A^-2`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::multicurve::{Arc, Multicurve, SkeinElement};
use super::tangle::{AnnularTangle, Slice};
use crate::algebra::LaurentA;
use crate::{Error, Result};

/// Largest number of crossings evaluated exactly.
pub const MAX_CROSSINGS: usize = 22;

const PARALLEL_THRESHOLD: usize = 10;

#[derive(Clone, Copy)]
struct Node {
    nbr: [(u32, u8); 2],
    seam: bool,
}

const UNLINKED: (u32, u8) = (u32::MAX, 0);

/// Arcs as `(a, b, winding)` with `a < b`, followed by the core loop count.
type StateKey = Vec<u16>;

/// Union of arcs and loops built while sweeping one crossingless state.
/// Buffers are kept between states.
struct StateGraph {
    endpoints: usize,
    nodes: Vec<Node>,
    stubs: Vec<(u32, u8)>,
    visited: Vec<bool>,
}

impl StateGraph {
    fn new(endpoints: usize) -> Self {
        Self { endpoints, nodes: Vec::new(), stubs: Vec::new(), visited: Vec::new() }
    }

    fn reset(&mut self) {
        self.nodes.clear();
        self.nodes.resize(self.endpoints, Node { nbr: [UNLINKED; 2], seam: false });
        self.stubs.clear();
        self.stubs.extend((0..self.endpoints as u32).map(|e| (e, 0)));
    }

    fn link(&mut self, a: (u32, u8), b: (u32, u8)) {
        self.nodes[a.0 as usize].nbr[a.1 as usize] = b;
        self.nodes[b.0 as usize].nbr[b.1 as usize] = a;
    }

    fn cup(&mut self, pos: usize) {
        let n = self.stubs.len();
        let id = self.nodes.len() as u32;
        let seam = pos == n + 1;
        self.nodes.push(Node { nbr: [UNLINKED; 2], seam });
        if seam {
            self.stubs.insert(0, (id, 0));
            self.stubs.push((id, 1));
        } else {
            self.stubs.insert(pos, (id, 0));
            self.stubs.insert(pos + 1, (id, 1));
        }
    }

    fn cap(&mut self, pos: usize) {
        let n = self.stubs.len();
        let seam = pos + 1 == n;
        let (low, high) = if seam {
            let high = self.stubs.pop().unwrap();
            (self.stubs.remove(0), high)
        } else {
            let low = self.stubs.remove(pos);
            (low, self.stubs.remove(pos))
        };
        let id = self.nodes.len() as u32;
        self.nodes.push(Node { nbr: [UNLINKED; 2], seam });
        self.link((id, 0), low);
        self.link((id, 1), high);
    }

    /// Seam crossings picked up when passing through `node` after entering at `port`.
    fn winding_through(&self, node: u32, port: u8) -> i32 {
        match (self.nodes[node as usize].seam, port) {
            (false, _) => 0,
            (true, 0) => 1,
            (true, _) => -1,
        }
    }

    /// Writes the state's key and returns the number of contractible loops.
    fn finish(&mut self, key: &mut StateKey) -> std::result::Result<u32, String> {
        self.visited.clear();
        self.visited.resize(self.nodes.len(), false);
        key.clear();
        for e in 0..self.endpoints {
            if self.visited[e] {
                continue;
            }
            self.visited[e] = true;
            let mut cur = self.nodes[e].nbr[0];
            let mut winding = 0;
            while cur.0 as usize >= self.endpoints {
                if cur == UNLINKED {
                    return Err(format!("endpoint {e} is not closed off"));
                }
                self.visited[cur.0 as usize] = true;
                winding += self.winding_through(cur.0, cur.1);
                cur = self.nodes[cur.0 as usize].nbr[1 - cur.1 as usize];
            }
            self.visited[cur.0 as usize] = true;
            if winding != 0 && winding != 1 {
                return Err(format!("arc from {e} to {} winds {winding} times", cur.0));
            }
            key.extend([e as u16, cur.0 as u16, winding as u16]);
        }
        let (mut core, mut trivial) = (0u16, 0);
        for start in self.endpoints..self.nodes.len() {
            if self.visited[start] {
                continue;
            }
            self.visited[start] = true;
            let mut winding = self.winding_through(start as u32, 0);
            let mut cur = self.nodes[start].nbr[1];
            while cur.0 as usize != start {
                self.visited[cur.0 as usize] = true;
                winding += self.winding_through(cur.0, cur.1);
                cur = self.nodes[cur.0 as usize].nbr[1 - cur.1 as usize];
            }
            match winding.abs() {
                0 => trivial += 1,
                1 => core += 1,
                w => return Err(format!("closed loop winds {w} times")),
            }
        }
        key.push(core);
        Ok(trivial)
    }
}

fn multicurve_from_key(key: &[u16]) -> Result<Multicurve> {
    let (arcs, core) = key.split_at(key.len() - 1);
    let arcs = arcs.chunks(3).map(|c| Arc { a: c[0], b: c[1], winding: c[2] as i8 });
    Multicurve::new(arcs, core[0] as u32)
}

type Tally = HashMap<StateKey, BTreeMap<(i32, u32), i64>>;

/// Sums the states selected by `masks` (bit set = turnback smoothing).
fn tally_states(tg: &AnnularTangle, masks: impl Iterator<Item = u64>) -> Result<Tally> {
    let mut tally = Tally::new();
    let mut g = StateGraph::new(tg.endpoints);
    let mut key = StateKey::new();
    for mask in masks {
        g.reset();
        let mut a_exp = 0;
        let mut crossing = 0;
        for slice in &tg.slices {
            match *slice {
                Slice::Cup { pos } => g.cup(pos),
                Slice::Cap { pos } => g.cap(pos),
                Slice::Crossing { pos, sign } => {
                    if mask >> crossing & 1 == 1 {
                        a_exp -= sign as i32;
                        g.cap(pos);
                        g.cup(pos);
                    } else {
                        a_exp += sign as i32;
                    }
                    crossing += 1;
                }
            }
        }
        let loops = g.finish(&mut key).map_err(|detail| Error::NonPlanar { slice: tg.slices.len(), detail })?;
        match tally.get_mut(&key) {
            Some(counts) => *counts.entry((a_exp, loops)).or_default() += 1,
            None => {
                tally.insert(key.clone(), BTreeMap::from([((a_exp, loops), 1)]));
            }
        }
    }
    Ok(tally)
}

fn merge(mut a: Tally, b: Tally) -> Tally {
    for (mc, counts) in b {
        let slot = a.entry(mc).or_default();
        for (key, n) in counts {
            *slot.entry(key).or_default() += n;
        }
    }
    a
}

/// Kauffman bracket of a closed annular tangle as a combination of multicurves.
pub fn resolve(tg: &AnnularTangle) -> Result<SkeinElement> {
    let inner = tg.validate()?;
    if inner != 0 {
        return Err(Error::MalformedTangle(format!("{inner} strands reach the inner boundary")));
    }
    let c = tg.num_crossings();
    if c > MAX_CROSSINGS {
        return Err(Error::TooManyCrossings { crossings: c, limit: MAX_CROSSINGS });
    }
    let states = 1u64 << c;
    let tally = if c >= PARALLEL_THRESHOLD {
        let chunk = 1u64 << (c - 6);
        (0..64u64)
            .into_par_iter()
            .map(|i| tally_states(tg, i * chunk..(i + 1) * chunk))
            .try_reduce(Tally::new, |a, b| Ok(merge(a, b)))?
    } else {
        tally_states(tg, 0..states)?
    };

    let max_loops = tally.values().flat_map(|m| m.keys().map(|k| k.1)).max().unwrap_or(0);
    let mut delta_pows = vec![LaurentA::from(1)];
    for _ in 0..max_loops {
        let next = delta_pows.last().unwrap() * &LaurentA::delta();
        delta_pows.push(next);
    }
    let mut out = SkeinElement::zero();
    for (key, counts) in tally {
        let mc = multicurve_from_key(&key)?;
        let mut coeff = LaurentA::default();
        for ((e, d), n) in counts {
            coeff += delta_pows[d as usize].shift(e).scale(&n.into());
        }
        out.add_term(mc, coeff);
    }
    Ok(out)
}

/// Stacks `top` radially outside the closed-up element `bottom`:
/// each multicurve of `bottom` is presented by its canonical slice word.
pub fn compose_with_element(top: &AnnularTangle, bottom: &SkeinElement) -> Result<SkeinElement> {
    let mut out = SkeinElement::zero();
    for (mc, c) in bottom.terms() {
        let full = top.compose(&mc.to_tangle())?;
        out = out.add(&resolve(&full)?.scale(c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn tg(endpoints: usize, slices: Vec<Slice>) -> AnnularTangle {
        AnnularTangle::new(endpoints, slices)
    }

    fn single(el: &SkeinElement) -> (Multicurve, LaurentA) {
        assert_eq!(el.len(), 1, "{el}");
        let (m, c) = el.terms().next().unwrap();
        (m.clone(), c.clone())
    }

    #[test]
    fn contractible_loop() {
        let el = resolve(&tg(0, vec![Slice::cup(0), Slice::cap(0)])).unwrap();
        assert_eq!(single(&el), (Multicurve::empty(), LaurentA::delta()));
    }

    #[test]
    fn core_loop() {
        let el = resolve(&tg(0, vec![Slice::cup(0), Slice::cap(1)])).unwrap();
        assert_eq!(single(&el), (Multicurve::core(1), LaurentA::from(1)));
        let seam_cup = resolve(&tg(0, vec![Slice::cup(1), Slice::cap(0)])).unwrap();
        assert_eq!(single(&seam_cup).0, Multicurve::core(1));
    }

    #[test]
    fn reidemeister_two_on_through_strands() {
        // two strands, closed by a cap; a canceling crossing pair in front
        for pos in [0, 1] {
            let plain = resolve(&tg(2, vec![Slice::cap(pos)])).unwrap();
            let twisted = resolve(&tg(
                2,
                vec![Slice::crossing(pos, 1), Slice::crossing(pos, -1), Slice::cap(pos)],
            ))
            .unwrap();
            assert_eq!(plain, twisted);
        }
    }

    #[test]
    fn kink_factor() {
        // strand pair closed by a seam cap; kink on strand 0 using a fresh cup
        for sign in [1i8, -1] {
            let kinked = tg(
                2,
                vec![Slice::cup(1), Slice::crossing(0, sign), Slice::cap(1), Slice::cap(1)],
            );
            let plain = resolve(&tg(2, vec![Slice::cap(1)])).unwrap();
            let el = resolve(&kinked).unwrap();
            let (m, c) = single(&plain);
            assert_eq!(el, SkeinElement::from_term(m, c * LaurentA::kink(sign as i32)));
        }
    }

    #[test]
    fn crossing_count_limit() {
        let mut slices = vec![Slice::cup(0)];
        slices.extend(std::iter::repeat_n(Slice::crossing(0, 1), MAX_CROSSINGS + 1));
        slices.push(Slice::cap(0));
        assert!(matches!(resolve(&tg(0, slices)), Err(Error::TooManyCrossings { .. })));
    }

    #[test]
    fn open_tangles_are_rejected() {
        assert!(resolve(&AnnularTangle::identity(2)).is_err());
    }

    #[test]
    fn compose_matches_resolving_bottom_first() {
        let top = tg(4, vec![Slice::crossing(1, 1), Slice::crossing(3, -1), Slice::crossing(0, 1)]);
        let bottom = tg(4, vec![Slice::crossing(2, 1), Slice::cap(3), Slice::cup(0), Slice::crossing(1, -1), Slice::cap(1), Slice::cap(0)]);
        let direct = resolve(&top.compose(&bottom).unwrap()).unwrap();
        let staged = compose_with_element(&top, &resolve(&bottom).unwrap()).unwrap();
        assert_eq!(direct, staged);
        let id = compose_with_element(&AnnularTangle::identity(4), &resolve(&bottom).unwrap()).unwrap();
        assert_eq!(id, resolve(&bottom).unwrap());
    }

    #[test]
    fn braid_inverse_composes_to_identity() {
        let sigma = tg(2, vec![Slice::crossing(1, 1)]);
        let inv = tg(2, vec![Slice::crossing(1, -1)]);
        let both = sigma.compose(&inv).unwrap();
        for closure in [tg(2, vec![Slice::cap(0)]), tg(2, vec![Slice::cap(1)])] {
            let a = resolve(&both.compose(&closure).unwrap()).unwrap();
            let b = resolve(&closure).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn two_core_loops_stack() {
        let two = resolve(&tg(0, vec![Slice::cup(0), Slice::cap(1), Slice::cup(0), Slice::cap(1)])).unwrap();
        assert_eq!(single(&two), (Multicurve::core(2), LaurentA::from(1)));
        assert!(!two.is_zero());
        let _ = LaurentA::zero();
    }
}
