//! The verification report: every check of the theorem at one `(p, q)`.

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::graded::{
    basis_to_trace, deg0_basis, deg0_basis_with, degk_orbits, degree_collision, dst_check, knot_class_relation,
    sine_matrix, verify_dst, Deg0Ranges,
};
use crate::algebra::substitute;
use crate::charvar::{
    abelian_parametrization, admissible_pairs, horner, CharacterVariety, Restriction, TorusKnotConfig,
};
use crate::skein::{EkBasis, QuotientSpace};
use crate::trace::{numeric_rep, series_g, trace_word, NumeratorPairing};
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 20_240_601;
const DST_TOL: f64 = 1e-8;
const ORACLE_TOL: f64 = 1e-9;
const TRACE_RANGE: u32 = 12;
const RELATION_RANGE: u32 = 3;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_k: u32,
    pub seed: u64,
    /// Random `(component, z)` samples for the numeric trace oracle.
    pub samples: usize,
    /// Record wall-clock milliseconds per check; off by default so reports are reproducible.
    pub timings: bool,
    pub pairing: NumeratorPairing,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { max_k: 2, seed: DEFAULT_SEED, samples: 20, timings: false, pairing: NumeratorPairing::Consistent }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub witness: Value,
    pub ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub config: TorusKnotConfig,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    /// Informational findings that do not affect the outcome.
    pub notes: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

type Outcome = Result<(bool, Value)>;
type CheckFn = Box<dyn Fn() -> Outcome + Send + Sync>;

fn run_check(name: String, f: &CheckFn, timings: bool) -> CheckResult {
    let start = Instant::now();
    let (pass, witness) = match f() {
        Ok(r) => r,
        Err(e) => (false, json!({ "error": e.to_string() })),
    };
    let ms = if timings { start.elapsed().as_millis() as u64 } else { 0 };
    CheckResult { name, pass, witness, ms }
}

fn check_admissible(cfg: TorusKnotConfig) -> Outcome {
    let pairs = admissible_pairs(&cfg);
    let expected = cfg.num_irreducible();
    let list: Vec<[u32; 2]> = pairs.iter().map(|p| [p.k, p.l]).collect();
    Ok((pairs.len() == expected, json!({ "count": pairs.len(), "expected": expected, "pairs": list })))
}

fn check_deg0_distinct(cfg: TorusKnotConfig) -> Outcome {
    let bound = 4 * cfg.p * cfg.q;
    let basis = deg0_basis(&cfg, bound);
    let collision = degree_collision(&cfg, &basis);
    // the n = 0 layer must meet every residue class modulo pq exactly once
    let modulus = cfg.p * cfg.q;
    let residues: std::collections::BTreeSet<u32> =
        (0..cfg.q).flat_map(|m1| (0..cfg.p).map(move |m2| (cfg.p * m1 + cfg.q * m2) % modulus)).collect();
    let witness = json!({
        "bound": bound,
        "count": basis.len(),
        "residues_mod_pq": residues.len(),
        "collision": collision.map(|(a, b, d)| json!([a.to_string(), b.to_string(), d])),
    });
    Ok((collision.is_none() && residues.len() as u32 == modulus, witness))
}

fn note_literal_ranges(cfg: TorusKnotConfig) -> Outcome {
    let bound = 4 * cfg.p * cfg.q;
    let collision = degree_collision(&cfg, &deg0_basis_with(&cfg, bound, Deg0Ranges::Literal));
    let witness = match collision {
        Some((a, b, d)) => json!({ "ranges": "m1 < p, m2 < q", "collision": [a.to_string(), b.to_string(), d] }),
        None => json!({ "ranges": "m1 < p, m2 < q", "collision": null }),
    };
    Ok((collision.is_none(), witness))
}

fn check_deg0_abelian(cfg: TorusKnotConfig) -> Outcome {
    let (sx, sy, sz) = abelian_parametrization(&cfg);
    let bound = 2 * cfg.p * cfg.q;
    let mut bad = Vec::new();
    let basis = deg0_basis(&cfg, bound);
    for idx in &basis {
        let f = substitute(&basis_to_trace(idx, &cfg), &sx, &sy, &sz)?;
        let d = idx.t_degree(&cfg).unwrap() as usize;
        if f.degree() != Some(d) {
            bad.push(json!([idx.to_string(), d, f.degree()]));
        }
    }
    Ok((bad.is_empty(), json!({ "bound": bound, "checked": basis.len(), "mismatches": bad })))
}

fn check_knot_class(cfg: TorusKnotConfig) -> Outcome {
    let cv = CharacterVariety::new(cfg);
    let rel = knot_class_relation(&cfg);
    let nonzero: Vec<String> = cv
        .components()
        .into_iter()
        .filter(|c| match cv.restrict(&rel, *c) {
            Restriction::Irreducible { z_coeffs, .. } => z_coeffs.iter().any(|c| !c.is_zero()),
            Restriction::Abelian(f) => f.degree().is_some(),
        })
        .map(|c| format!("{c:?}"))
        .collect();
    Ok((nonzero.is_empty(), json!({ "relation": rel.to_string(), "nonvanishing_on": nonzero })))
}

fn check_degk_count(cfg: TorusKnotConfig, k: u32) -> Outcome {
    let orbits = degk_orbits(&cfg, k)?;
    let expected = cfg.num_irreducible();
    Ok((orbits.len() == expected, json!({ "orbits": orbits.len(), "components": expected })))
}

fn check_degk_leading(cfg: TorusKnotConfig, k: u32) -> Outcome {
    let cv = CharacterVariety::new(cfg);
    let orbits = degk_orbits(&cfg, k)?;
    let sines = sine_matrix(&cfg, k)?;
    let pairs = cv.pairs().to_vec();
    let mut lead = nalgebra::DMatrix::zeros(orbits.len(), pairs.len());
    let mut wrong_degree = Vec::new();
    for (r, idx) in orbits.iter().enumerate() {
        let f = basis_to_trace(idx, &cfg);
        if cv.degree(&f) != k as usize {
            wrong_degree.push(idx.to_string());
        }
        for (c, v) in cv.leading_coeff_vector(&f, k as usize).into_iter().enumerate() {
            lead[(r, c)] = v;
        }
    }
    let mut max_err: f64 = 0.0;
    for (c, pair) in pairs.iter().enumerate() {
        let scale = 2.0 * pair.theta_u(&cfg).sin() * pair.theta_v(&cfg).sin();
        if scale <= 0.0 {
            max_err = f64::INFINITY;
        }
        for r in 0..orbits.len() {
            max_err = max_err.max((sines[(r, c)] - scale * lead[(r, c)]).abs());
        }
    }
    let dst = dst_check(&lead, DST_TOL);
    let pass = wrong_degree.is_empty() && max_err < ORACLE_TOL && dst.invertible;
    Ok((pass, json!({ "wrong_degree": wrong_degree, "max_scaled_error": max_err, "leading_matrix": dst })))
}

fn check_dst(cfg: TorusKnotConfig) -> Outcome {
    let r = verify_dst(&cfg, DST_TOL)?;
    Ok((r.invertible, serde_json::to_value(&r)?))
}

fn check_traces(cfg: TorusKnotConfig, opts: &VerifyOptions) -> Outcome {
    let n = TRACE_RANGE;
    let series = series_g(n as usize, n as usize, opts.pairing);
    let mut exact_mismatch = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            if series[i as usize][j as usize] != trace_word(i, j) {
                exact_mismatch.push([i, j]);
            }
        }
    }
    let cv = CharacterVariety::new(cfg);
    // z-coefficients of both symbolic routes on every line, indexed [pair][i][j]
    let tables: Vec<Vec<Vec<[Vec<Complex64>; 2]>>> = cv
        .pairs()
        .par_iter()
        .map(|pair| {
            (0..=n)
                .map(|i| {
                    (0..=n)
                        .map(|j| {
                            [
                                cv.line_coefficients(&trace_word(i, j), pair),
                                cv.line_coefficients(&series[i as usize][j as usize], pair),
                            ]
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ ((cfg.p as u64) << 32 | cfg.q as u64));
    let mut max_rel: f64 = 0.0;
    for _ in 0..opts.samples {
        let which = rng.gen_range(0..cv.pairs().len());
        let pair = cv.pairs()[which];
        let z = Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-1.0..1.0));
        let rep = numeric_rep(&pair, z, &cfg)?;
        for i in 0..=n {
            for j in 0..=n {
                let oracle = rep.trace_word(i, j);
                let scale = oracle.norm().max(1.0);
                for coeffs in &tables[which][i as usize][j as usize] {
                    max_rel = max_rel.max((horner(coeffs, z) - oracle).norm() / scale);
                }
            }
        }
    }
    let exact_count = exact_mismatch.len();
    let witness = json!({
        "range": n,
        "samples": opts.samples,
        "exact_mismatches": exact_count,
        "first_mismatch": exact_mismatch.first(),
        "max_relative_error": max_rel,
    });
    Ok((exact_count == 0 && max_rel < ORACLE_TOL, witness))
}

fn check_relations(side: usize, k: usize) -> Outcome {
    let quotient = QuotientSpace::new(k, side)?;
    let mut leading = Vec::new();
    for n in 0..=RELATION_RANGE {
        let rel = quotient.relation(n)?;
        leading.push(json!({ "n": n, "degree": rel.len() - 1, "leading": rel.last().unwrap().to_string() }));
    }
    Ok((true, Value::Array(leading)))
}

fn computed(basis: &Result<EkBasis>) -> Result<&EkBasis> {
    basis.as_ref().map_err(|e| Error::Degenerate(e.to_string()))
}

fn check_tau_order(basis: &Result<EkBasis>) -> Outcome {
    let b = computed(basis)?;
    let pass = b.tau_has_order_2k();
    Ok((pass, json!({ "power": 2 * b.k })))
}

fn check_triangular(basis: &Result<EkBasis>) -> Outcome {
    let b = computed(basis)?;
    let diagonal: Vec<String> = b.raw.iter().enumerate().map(|(i, r)| r[i].to_string()).collect();
    Ok((b.is_triangular(), json!({ "diagonal": diagonal })))
}

fn check_exponents(basis: &Result<EkBasis>) -> Outcome {
    let b = computed(basis)?;
    let u: Vec<Value> = b.exponents.iter().map(|(s, u)| json!({ "sign": s, "u": u })).collect();
    Ok((b.exponents_antisymmetric(), json!({ "exponents": u })))
}

fn check_swap(basis: &Result<EkBasis>) -> Outcome {
    let b = computed(basis)?;
    let norms: Vec<String> = b.normalization.iter().map(ToString::to_string).collect();
    Ok((b.tau_swaps_normalized(), json!({ "normalization": norms })))
}

/// Runs every check for `cfg`. Checks run concurrently; their order in the
/// report is fixed.
pub fn verify_theorem(cfg: TorusKnotConfig, opts: &VerifyOptions) -> VerificationReport {
    let mut checks: Vec<(String, CheckFn)> = vec![
        ("admissible_pairs".into(), Box::new(move || check_admissible(cfg))),
        ("deg0_distinct_degrees".into(), Box::new(move || check_deg0_distinct(cfg))),
        ("deg0_abelian_degrees".into(), Box::new(move || check_deg0_abelian(cfg))),
        ("knot_class_relation".into(), Box::new(move || check_knot_class(cfg))),
    ];
    for k in 1..=opts.max_k {
        checks.push((format!("degk_orbit_count[k={k}]"), Box::new(move || check_degk_count(cfg, k))));
        checks.push((format!("degk_leading_coefficients[k={k}]"), Box::new(move || check_degk_leading(cfg, k))));
    }
    checks.push(("dst_invertible".into(), Box::new(move || check_dst(cfg))));
    let trace_opts = opts.clone();
    checks.push(("trace_triple_agreement".into(), Box::new(move || check_traces(cfg, &trace_opts))));

    let sides = [cfg.q as usize, cfg.p as usize];
    let ks: Vec<usize> = (1..=opts.max_k as usize).collect();
    let bases: Vec<((usize, usize), Result<EkBasis>)> = sides
        .iter()
        .flat_map(|&s| ks.iter().map(move |&k| (s, k)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(s, k)| ((s, k), EkBasis::compute(k, s)))
        .collect();
    let bases = std::sync::Arc::new(bases);
    for (i, ((s, k), _)) in bases.iter().enumerate() {
        let (s, k) = (*s, *k);
        let tag = format!("[side={s},k={k}]");
        checks.push((format!("relation_degrees{tag}"), Box::new(move || check_relations(s, k))));
        type Pick = fn(&Result<EkBasis>) -> Outcome;
        let items: [(&str, Pick); 4] = [
            ("tau_order", check_tau_order),
            ("ek_triangular", check_triangular),
            ("ek_exponents_antisymmetric", check_exponents),
            ("ek_tau_swap", check_swap),
        ];
        for (name, f) in items {
            let bases = bases.clone();
            checks.push((format!("{name}{tag}"), Box::new(move || f(&bases[i].1))));
        }
    }

    let timings = opts.timings;
    let results: Vec<CheckResult> = checks.par_iter().map(|(name, f)| run_check(name.clone(), f, timings)).collect();
    let literal: CheckFn = Box::new(move || note_literal_ranges(cfg));
    let notes = vec![run_check("deg0_literal_ranges".into(), &literal, timings)];
    VerificationReport { config: cfg, seed: opts.seed, checks: results, notes }
}
