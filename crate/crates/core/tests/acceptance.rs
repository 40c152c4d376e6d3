//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines are always printed.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use torus_skein::algebra::LaurentA;
use torus_skein::assembly::{deg0_basis, deg0_basis_with, degree_collision, verify_dst, Deg0Ranges};
use torus_skein::charvar::{admissible_pairs, horner, CharacterVariety, TorusKnotConfig};
use torus_skein::skein::{
    resolve, tau, AnnularTangle, EkBasis, Multicurve, QuotientSpace, SkeinElement, Slice,
};
use torus_skein::trace::{
    leading_z_coeff, numeric_rep, series_g, trace_word, NumeratorPairing, TraceWordIndex,
};

type Outcome = Result<String, String>;

fn coprime_pairs(max: u32) -> impl Iterator<Item = TorusKnotConfig> {
    (2..=max).flat_map(move |p| (p + 1..=max).filter(move |q| p.gcd(q) == 1).map(move |q| TorusKnotConfig::new(p, q).unwrap()))
}

const TRACE_CONFIGS: [(u32, u32); 5] = [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)];

fn criterion_1() -> Outcome {
    let mut n = 0;
    for cfg in coprime_pairs(12) {
        let got = admissible_pairs(&cfg).len();
        let want = ((cfg.p - 1) * (cfg.q - 1) / 2) as usize;
        if got != want {
            return Err(format!("T({},{}): {got} pairs, expected {want}", cfg.p, cfg.q));
        }
        n += 1;
    }
    Ok(format!("{n} coprime pairs"))
}

fn criterion_2() -> Outcome {
    let max = 12u32;
    let series = series_g(max as usize, max as usize, NumeratorPairing::Consistent);
    for i in 0..=max {
        for j in 0..=max {
            if series[i as usize][j as usize] != trace_word(i, j) {
                return Err(format!("series and recursion differ at ({i},{j})"));
            }
        }
    }
    let swapped = series_g(max as usize, max as usize, NumeratorPairing::Swapped);
    if swapped[1][0] == trace_word(1, 0) {
        return Err("swapped numerator pairing was not detected".into());
    }
    let mut worst: f64 = 0.0;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (p, q) in TRACE_CONFIGS {
        let cfg = TorusKnotConfig::new(p, q).unwrap();
        let cv = CharacterVariety::new(cfg);
        let pairs = cv.pairs();
        let tables: Vec<Vec<Vec<Vec<Complex64>>>> = pairs
            .iter()
            .map(|pair| {
                (0..=max).map(|i| (0..=max).map(|j| cv.line_coefficients(&trace_word(i, j), pair)).collect()).collect()
            })
            .collect();
        for _ in 0..20 {
            let which = rng.gen_range(0..pairs.len());
            let pair = pairs[which];
            let z = Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-1.0..1.0));
            let rep = numeric_rep(&pair, z, &cfg).map_err(|e| e.to_string())?;
            for i in 0..=max {
                for j in 0..=max {
                    let oracle = rep.trace_word(i, j);
                    let sym = horner(&tables[which][i as usize][j as usize], z);
                    worst = worst.max((sym - oracle).norm() / oracle.norm().max(1.0));
                }
            }
        }
    }
    if worst >= 1e-9 {
        return Err(format!("numeric oracle off by {worst:e}"));
    }
    Ok(format!("exact for i,j <= {max}, oracle relative error {worst:.1e}"))
}

fn criterion_3() -> Outcome {
    let mut worst: f64 = 0.0;
    for (p, q) in TRACE_CONFIGS {
        let cfg = TorusKnotConfig::new(p, q).unwrap();
        let cv = CharacterVariety::new(cfg);
        for i in 1..=8 {
            for j in 1..=8 {
                let got = cv.leading_coeff_vector(&trace_word(i, j), 1);
                for (pair, g) in cv.pairs().iter().zip(got) {
                    let want = leading_z_coeff(TraceWordIndex { i, j }, pair, &cfg);
                    worst = worst.max((g - want).abs());
                }
            }
        }
    }
    if worst >= 1e-9 {
        return Err(format!("leading coefficient off by {worst:e}"));
    }
    Ok(format!("max error {worst:.1e}"))
}

fn criterion_4() -> Outcome {
    let delta = resolve(&AnnularTangle::new(0, vec![Slice::cup(0), Slice::cap(0)])).unwrap();
    if delta != SkeinElement::from_term(Multicurve::empty(), LaurentA::delta()) {
        return Err(format!("contractible loop gave {delta}"));
    }
    // first move: a kink at every position of every closed word of two or four strands
    for n in [2usize, 4] {
        for closure in common::closures(n) {
            for word in common::crossing_words(n, 1) {
                let plain = common::bracket(n, &word, &closure);
                for pos in 0..n {
                    for sign in [1i8, -1] {
                        let mut w = word.clone();
                        w.extend([Slice::cup(pos + 1), Slice::crossing(pos, sign), Slice::cap(pos + 1)]);
                        let kinked = common::bracket(n, &w, &closure);
                        if kinked != plain.scale(&LaurentA::kink(sign as i32)) {
                            return Err(format!("kink {sign} at {pos} in {word:?}"));
                        }
                    }
                }
            }
        }
    }
    // (strands, base length for the second move, base length for the third move)
    let plan = [(2usize, 4usize, None), (4, 3, Some(3usize)), (6, 2, Some(2))];
    let mut comparisons = 0;
    for (n, l2, l3) in plan {
        for len in 0..=l2 {
            comparisons += common::reidemeister_two(n, len)?;
        }
        if let Some(l3) = l3 {
            for len in 0..=l3 {
                comparisons += common::reidemeister_three(n, len)?;
            }
        }
    }
    Ok(format!("{comparisons} move comparisons, kink factor -A^(+-3), loop -A^2 - A^-2"))
}

const SKEIN_P: [usize; 3] = [2, 3, 5];

fn bases() -> Result<Vec<EkBasis>, String> {
    let mut out = Vec::new();
    for p in SKEIN_P {
        for k in 1..=3 {
            out.push(EkBasis::compute(k, p).map_err(|e| format!("p={p} k={k}: {e}"))?);
        }
    }
    Ok(out)
}

fn criterion_5(bases: &[EkBasis]) -> Outcome {
    for b in bases {
        if !b.tau_has_order_2k() {
            return Err(format!("tau^{} is not the identity for p={} k={}", 2 * b.k, b.p, b.k));
        }
    }
    // directly on diagrams where the doubled collar stays within budget
    let mut direct = 0;
    for p in [2usize, 3] {
        let quotient = QuotientSpace::new(1, p).unwrap();
        for m in 0..p as u32 - 1 {
            let w = Multicurve::w_power(1, m);
            let twice = tau(&tau(&w.to_tangle(), p).unwrap(), p).unwrap();
            let got = quotient.project(&resolve(&twice).map_err(|e| e.to_string())?).unwrap();
            let want = quotient.project(&SkeinElement::from_multicurve(w)).unwrap();
            if got != want {
                return Err(format!("tau^2 w^{m} differs for p={p}"));
            }
            direct += 1;
        }
    }
    Ok(format!("{} (p,k) cases via the matrix of tau, {direct} directly on diagrams", bases.len()))
}

fn criterion_6(bases: &[EkBasis]) -> Outcome {
    for b in bases {
        let tag = format!("p={} k={}", b.p, b.k);
        if !b.is_triangular() {
            return Err(format!("{tag}: not triangular with unit diagonal"));
        }
        if !b.exponents_antisymmetric() {
            return Err(format!("{tag}: exponents {:?}", b.exponents));
        }
        if !b.tau_swaps_normalized() {
            return Err(format!("{tag}: normalized elements not swapped"));
        }
    }
    Ok(format!("{} (p,k) cases", bases.len()))
}

fn criterion_7() -> Outcome {
    let mut n_rel = 0;
    for p in 2..=5 {
        for k in 1..=3 {
            let quotient = QuotientSpace::new(k, p).unwrap();
            for n in 0..=3u32 {
                let rel = quotient.relation(n).map_err(|e| format!("p={p} k={k} n={n}: {e}"))?;
                if rel.len() != n as usize + p || rel.last().unwrap().as_unit().is_none() {
                    return Err(format!("p={p} k={k}: rel_{n} malformed"));
                }
                n_rel += 1;
            }
        }
    }
    Ok(format!("{n_rel} relations with degree n+p-1 and unit leading coefficient"))
}

fn criterion_8() -> Outcome {
    let mut worst = f64::INFINITY;
    let mut n = 0;
    for cfg in coprime_pairs(12) {
        for cfg in [cfg, TorusKnotConfig::new(cfg.q, cfg.p).unwrap()] {
            let r = verify_dst(&cfg, 1e-8).map_err(|e| e.to_string())?;
            if !r.invertible {
                return Err(format!("T({},{}): scaled det {}", cfg.p, cfg.q, r.scaled_det));
            }
            worst = worst.min(r.scaled_det.abs());
            n += 1;
        }
    }
    Ok(format!("{n} configurations, smallest scaled |det| {worst:.3e}"))
}

fn criterion_9() -> Outcome {
    for cfg in coprime_pairs(12) {
        for cfg in [cfg, TorusKnotConfig::new(cfg.q, cfg.p).unwrap()] {
            let basis = deg0_basis(&cfg, 4 * cfg.p * cfg.q);
            if let Some((a, b, d)) = degree_collision(&cfg, &basis) {
                return Err(format!("T({},{}): {a} and {b} share degree {d}", cfg.p, cfg.q));
            }
        }
    }
    let trefoil = TorusKnotConfig::new(2, 3).unwrap();
    let literal = deg0_basis_with(&trefoil, 24, Deg0Ranges::Literal);
    match degree_collision(&trefoil, &literal) {
        Some((a, b, d)) => Ok(format!("distinct for all p,q <= 12; literal ranges collide at T(2,3): {a}, {b} -> {d}")),
        None => Err("literal ranges unexpectedly injective for T(2,3)".into()),
    }
}

fn criterion_10() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_torus-skein");
    for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5)] {
        let out = Command::new(bin)
            .args(["verify", &p.to_string(), &q.to_string(), "--max-k", "2", "--json"])
            .output()
            .map_err(|e| e.to_string())?;
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let checks = report["checks"].as_array().ok_or("report has no checks")?;
        let failed: Vec<_> = checks.iter().filter(|c| c["pass"] != true).map(|c| c["name"].clone()).collect();
        if out.status.code() != Some(0) || !failed.is_empty() {
            return Err(format!("T({p},{q}): exit {:?}, failed {failed:?}", out.status.code()));
        }
    }
    Ok("verify exits 0 with every check passing for T(2,3), T(2,5), T(3,4), T(3,5)".into())
}

fn report(number: u32, title: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (pass, detail) = match outcome {
        Ok(d) if elapsed <= budget => (true, d),
        Ok(d) => (false, format!("{d}; took {elapsed:.1?}, budget {budget:?}")),
        Err(e) => (false, e),
    };
    let status = if pass { "PASS" } else { "FAIL" };
    println!("{status} criterion {number:>2} {title}: {detail} [{:.2}s]", elapsed.as_secs_f64());
    pass
}

fn main() {
    let secs = Duration::from_secs;
    let mut ok = true;
    ok &= report(1, "component count", secs(1), criterion_1);
    ok &= report(2, "trace triple agreement", secs(10), criterion_2);
    ok &= report(3, "leading coefficient formula", secs(5), criterion_3);
    ok &= report(4, "Kauffman engine soundness", secs(60), criterion_4);
    let start = Instant::now();
    let computed = bases();
    let shared = start.elapsed();
    match computed {
        Ok(b) => {
            ok &= report(5, "tau has order 2k", secs(120).saturating_sub(shared), || criterion_5(&b));
            ok &= report(6, "e^k_j basis", secs(120).saturating_sub(shared), || criterion_6(&b));
        }
        Err(e) => {
            ok &= report(5, "tau has order 2k", secs(120), || Err(e.clone()));
            ok &= report(6, "e^k_j basis", secs(120), || Err(e));
        }
    }
    ok &= report(7, "relation degrees", secs(120), criterion_7);
    ok &= report(8, "sine matrix invertible", secs(1), criterion_8);
    ok &= report(9, "degree-0 independence", secs(1), criterion_9);
    ok &= report(10, "theorem report", secs(300), criterion_10);
    if !ok {
        std::process::exit(1);
    }
}
