//! Word enumeration shared by the integration tests.
#![allow(dead_code)]

use torus_skein::skein::{resolve, AnnularTangle, SkeinElement, Slice};

/// All crossing words of exactly `len` crossings on `n` strands.
pub fn crossing_words(n: usize, len: usize) -> Vec<Vec<Slice>> {
    let letters: Vec<Slice> = (0..n).flat_map(|i| [Slice::crossing(i, 1), Slice::crossing(i, -1)]).collect();
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |l| {
                    let mut w = w.clone();
                    w.push(*l);
                    w
                })
            })
            .collect();
    }
    words
}

/// The two closures used to cap off `n` strands: adjacent caps only, or a
/// seam cap first.
pub fn closures(n: usize) -> [Vec<Slice>; 2] {
    let plain = vec![Slice::cap(0); n / 2];
    let mut seam = vec![Slice::cap(n - 1)];
    seam.extend(vec![Slice::cap(0); n / 2 - 1]);
    [plain, seam]
}

pub fn closed(n: usize, word: &[Slice], closure: &[Slice]) -> AnnularTangle {
    let mut slices = word.to_vec();
    slices.extend_from_slice(closure);
    AnnularTangle::new(n, slices)
}

pub fn bracket(n: usize, word: &[Slice], closure: &[Slice]) -> SkeinElement {
    resolve(&closed(n, word, closure)).expect("well-formed word")
}

fn splice(word: &[Slice], at: usize, insert: &[Slice]) -> Vec<Slice> {
    let mut w = word[..at].to_vec();
    w.extend_from_slice(insert);
    w.extend_from_slice(&word[at..]);
    w
}

/// Checks every second-move insertion into every word of length `len`.
/// Returns the number of comparisons, or the first failing word.
pub fn reidemeister_two(n: usize, len: usize) -> Result<usize, String> {
    let mut count = 0;
    for word in crossing_words(n, len) {
        for closure in closures(n) {
            let base = bracket(n, &word, &closure);
            for at in 0..=word.len() {
                for i in 0..n {
                    for s in [1, -1] {
                        let w = splice(&word, at, &[Slice::crossing(i, s), Slice::crossing(i, -s)]);
                        if bracket(n, &w, &closure) != base {
                            return Err(format!("{w:?} closed by {closure:?}"));
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(count)
}

/// Both sides of the third move, with all signs equal and in the mixed form.
pub fn third_move_pairs(n: usize) -> Vec<(Vec<Slice>, Vec<Slice>)> {
    let mut out = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        let c = Slice::crossing;
        for s in [1, -1] {
            out.push((vec![c(i, s), c(j, s), c(i, s)], vec![c(j, s), c(i, s), c(j, s)]));
            out.push((vec![c(i, s), c(j, s), c(i, -s)], vec![c(j, -s), c(i, s), c(j, s)]));
        }
    }
    out
}

/// Checks every third-move substitution inside every word of length `len`.
pub fn reidemeister_three(n: usize, len: usize) -> Result<usize, String> {
    let mut count = 0;
    let pairs = third_move_pairs(n);
    for word in crossing_words(n, len) {
        for closure in closures(n) {
            for at in 0..=word.len() {
                for (lhs, rhs) in &pairs {
                    let a = bracket(n, &splice(&word, at, lhs), &closure);
                    let b = bracket(n, &splice(&word, at, rhs), &closure);
                    if a != b {
                        return Err(format!("{lhs:?} vs {rhs:?} at {at} in {word:?}, closure {closure:?}"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}
