//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::algebra::chebyshev;
use crate::assembly::{basis_to_trace, deg0_basis, degk_orbits, verify_theorem, VerifyOptions, DEFAULT_SEED};
use crate::charvar::{CharacterVariety, TorusKnotConfig};
use crate::skein::{resolve, AnnularTangle};
use crate::trace::trace_word;
use crate::{Error, Result};

/// Environment variable overriding the worker thread count.
pub const THREADS_ENV: &str = "TORUS_SKEIN_THREADS";

#[derive(Parser, Debug)]
#[command(name = "torus-skein", version, about = "Kauffman bracket skein modules of torus knot complements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Chebyshev polynomial T_N(s) with T_N(t + 1/t) = t^N + t^-N.
    Chebyshev { n: usize },
    /// List the components of the character variety of T(P,Q).
    CharVariety {
        p: u32,
        q: u32,
        #[arg(long)]
        json: bool,
    },
    /// Print tr(u^I v^J) as a polynomial in x, y, z.
    TracePoly { i: u32, j: u32 },
    /// Evaluate the Kauffman bracket of an annular tangle given as JSON.
    Bracket {
        file: std::path::PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List graded basis elements and their trace functions.
    SkeinBasis {
        p: u32,
        q: u32,
        #[arg(long)]
        degree: u32,
        /// Largest leading degree listed in degree zero (default P*Q).
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Run every check of the structure theorem for T(P,Q).
    Verify {
        p: u32,
        q: u32,
        #[arg(long, default_value_t = 2)]
        max_k: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Report wall-clock time per check (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidConfig { .. } | Error::IndexOutOfRange(_) | Error::Parse(_) | Error::Io(_) | Error::Json(_)
    ) || matches!(e, Error::MalformedTangle(_) | Error::TooManyCrossings { .. })
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second call fails harmlessly once the pool exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Runs the command line `args` and returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    configure_threads();
    match execute(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if is_usage_error(&e) {
                2
            } else {
                1
            }
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Chebyshev { n } => writeln!(out, "{}", chebyshev(n))?,
        Command::TracePoly { i, j } => writeln!(out, "{}", trace_word(i, j))?,
        Command::CharVariety { p, q, json } => {
            let cv = CharacterVariety::new(TorusKnotConfig::new(p, q)?);
            let records = cv.component_records();
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&json!({ "p": p, "q": q, "components": records }))?)?;
            } else {
                writeln!(out, "T({p},{q}): abelian curve and {} irreducible components", cv.pairs().len())?;
                for pair in cv.pairs() {
                    let cfg = cv.config();
                    writeln!(
                        out,
                        "  (k,l) = ({},{})  x = {:.12}  y = {:.12}",
                        pair.k,
                        pair.l,
                        pair.x_value(cfg),
                        pair.y_value(cfg)
                    )?;
                }
            }
        }
        Command::Bracket { file, json } => {
            let tangle = AnnularTangle::from_json(&std::fs::read_to_string(&file)?)?;
            let value = resolve(&tangle)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&value.to_records())?)?;
            } else {
                writeln!(out, "{value}")?;
            }
        }
        Command::SkeinBasis { p, q, degree, bound, json } => {
            let cfg = TorusKnotConfig::new(p, q)?;
            let indices = if degree == 0 { deg0_basis(&cfg, bound.unwrap_or(p * q)) } else { degk_orbits(&cfg, degree)? };
            if json {
                let items: Vec<_> = indices
                    .iter()
                    .map(|idx| json!({ "index": idx, "t_degree": idx.t_degree(&cfg), "trace": basis_to_trace(idx, &cfg).to_string() }))
                    .collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&items)?)?;
            } else {
                for idx in &indices {
                    match idx.t_degree(&cfg) {
                        Some(d) => writeln!(out, "{idx}  d={d}  {}", basis_to_trace(idx, &cfg))?,
                        None => writeln!(out, "{idx}  {}", basis_to_trace(idx, &cfg))?,
                    }
                }
            }
        }
        Command::Verify { p, q, max_k, seed, json, timings } => {
            let cfg = TorusKnotConfig::new(p, q)?;
            let opts = VerifyOptions { max_k, seed, timings, ..Default::default() };
            let report = verify_theorem(cfg, &opts);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                writeln!(out, "T({p},{q}), max k = {max_k}, seed = {seed}")?;
                for c in &report.checks {
                    let status = if c.pass { "PASS" } else { "FAIL" };
                    if c.pass {
                        writeln!(out, "{status} {}", c.name)?;
                    } else {
                        writeln!(out, "{status} {}  {}", c.name, c.witness)?;
                    }
                }
                for n in &report.notes {
                    writeln!(out, "note {}: {}", n.name, n.witness)?;
                }
                let passed = report.checks.iter().filter(|c| c.pass).count();
                writeln!(out, "{passed}/{} checks passed", report.checks.len())?;
            }
            return Ok(report.all_pass());
        }
    }
    Ok(true)
}
