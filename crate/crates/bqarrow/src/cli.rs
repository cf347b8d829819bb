//! The `bqarrow` command line.
//!
//! Exit status is 0 on success, 1 when an input breaks an axiom or a check
//! fails, and 2 for unreadable or malformed input.

use crate::fuzz::{fuzz, FuzzConfig};
use crate::io::{load_biquandle, load_weight, InvariantJson, LoadError, WeightJson};
use crate::knotdb::{classify, load_table};
use bqarrow_core::{
    compute_invariant, parse_gauss_code, solve_weight_space, verify_weight, AlgebraError, ArrowWeight, Biquandle,
    GaussDiagram, WeightError,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use std::fmt::Write;
use std::path::{Path, PathBuf};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for a failed axiom or check.
pub const EXIT_VIOLATION: i32 = 1;
/// Exit status for bad input.
pub const EXIT_INPUT: i32 = 2;

/// Report format.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable text.
    #[default]
    Text,
    /// One JSON document on stdout.
    Json,
}

/// Biquandle arrow-weight invariants of knots given as Gauss codes.
#[derive(Debug, Parser)]
#[command(name = "bqarrow", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// What to do.
    #[command(subcommand)]
    pub command: Command,
}

/// A Gauss code given inline or in a file.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CodeSource {
    /// Inline Gauss code such as `O1+U2+O3+U1+O2+U3+`; `""` is the unknot.
    #[arg(long, allow_hyphen_values = true)]
    pub code: Option<String>,
    /// File holding one Gauss code; `#` lines are ignored.
    #[arg(long)]
    pub code_file: Option<PathBuf>,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the biquandle axioms.
    Validate {
        /// Biquandle JSON file.
        biquandle: PathBuf,
    },
    /// Check the arrow-weight axioms.
    VerifyWeight {
        /// Biquandle JSON file.
        biquandle: PathBuf,
        /// Weight JSON file.
        weight: PathBuf,
    },
    /// Compute all arrow weights modulo m.
    Solve {
        /// Biquandle JSON file.
        biquandle: PathBuf,
        /// Modulus, at least 2.
        #[arg(long = "mod")]
        modulus: u64,
        /// List the weights when there are at most this many.
        #[arg(long, default_value_t = 0)]
        limit: usize,
        /// List the first `limit` weights even if there are more.
        #[arg(long)]
        truncate: bool,
        /// Report whether this weight file lies in the space.
        #[arg(long)]
        contains: Option<PathBuf>,
    },
    /// Evaluate the invariant of one knot.
    Invariant {
        /// Knot to evaluate.
        #[command(flatten)]
        source: CodeSource,
        /// Biquandle JSON file.
        biquandle: PathBuf,
        /// Weight JSON file.
        weight: PathBuf,
    },
    /// Group the knots of a table by invariant value.
    Classify {
        /// Table of `name<TAB>gauss code` lines.
        table: PathBuf,
        /// Biquandle JSON file.
        biquandle: PathBuf,
        /// Weight JSON file.
        weight: PathBuf,
    },
    /// Check the invariant against random Reidemeister walks.
    Fuzz {
        /// Knot to evaluate.
        #[command(flatten)]
        source: CodeSource,
        /// Biquandle JSON file.
        biquandle: PathBuf,
        /// Weight JSON file.
        weight: PathBuf,
        /// Moves per walk.
        #[arg(long, default_value_t = 10)]
        steps: usize,
        /// Number of walks.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Base seed; required with `--format json`.
        #[arg(long)]
        seed: Option<u64>,
        /// Drop arrow signs from the weight sum (negative control).
        #[arg(long, hide = true)]
        ignore_signs: bool,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    /// Process exit status.
    pub code: i32,
    /// Text for stdout.
    pub stdout: String,
    /// Text for stderr.
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn with(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        let code = if e.is_violation() { EXIT_VIOLATION } else { EXIT_INPUT };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(e: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_INPUT, message: e.to_string() }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Validate { biquandle } => validate(cli.format, biquandle),
        Command::VerifyWeight { biquandle, weight } => verify(cli.format, biquandle, weight),
        Command::Solve { biquandle, modulus, limit, truncate, contains } => {
            solve(cli.format, biquandle, *modulus, *limit, *truncate, contains.as_deref())
        }
        Command::Invariant { source, biquandle, weight } => invariant(cli.format, source, biquandle, weight),
        Command::Classify { table, biquandle, weight } => classify_cmd(cli.format, table, biquandle, weight),
        Command::Fuzz { source, biquandle, weight, steps, trials, seed, ignore_signs } => {
            let seed = match (seed, cli.format) {
                (Some(s), _) => *s,
                (None, Format::Text) => 0,
                (None, Format::Json) => {
                    return failure(cli.format, input_error("--seed is required with --format json"));
                }
            };
            let cfg = FuzzConfig { steps: *steps, trials: *trials, seed, ignore_signs: *ignore_signs };
            fuzz_cmd(cli.format, source, biquandle, weight, cfg)
        }
    };
    result.unwrap_or_else(|f| failure(cli.format, f))
}

fn failure(format: Format, f: Failure) -> Outcome {
    let stdout = match format {
        Format::Text => String::new(),
        Format::Json => to_json(&json!({ "error": f.message })),
    };
    Outcome { code: f.code, stdout, stderr: format!("error: {}\n", f.message) }
}

fn validate(format: Format, path: &Path) -> Result<Outcome, Failure> {
    match load_biquandle(path) {
        Ok(b) => Ok(Outcome::ok(match format {
            Format::Text => format!("valid biquandle with {} elements\n", b.size()),
            Format::Json => to_json(&json!({ "valid": true, "n": b.size() })),
        })),
        Err(LoadError::Algebra(e @ AlgebraError::AxiomViolation { .. })) => {
            let AlgebraError::AxiomViolation { axiom, witness } = &e else { unreachable!() };
            let one: Vec<usize> = witness.0.iter().map(|v| v + 1).collect();
            Ok(Outcome::with(
                EXIT_VIOLATION,
                match format {
                    Format::Text => format!("invalid: {e}\n"),
                    Format::Json => to_json(&json!({ "valid": false, "axiom": axiom.to_string(), "witness": one })),
                },
            ))
        }
        Err(e) => Err(e.into()),
    }
}

fn load_pair(b: &Path, w: &Path) -> Result<(Biquandle, ArrowWeight), Failure> {
    let b = load_biquandle(b)?;
    let w = load_weight(w)?;
    if w.size() != b.size() {
        return Err(input_error(WeightError::Dimension { expected: b.size() }));
    }
    Ok((b, w))
}

fn verify(format: Format, bpath: &Path, wpath: &Path) -> Result<Outcome, Failure> {
    let (b, w) = load_pair(bpath, wpath)?;
    match verify_weight(&b, &w) {
        Ok(count) => Ok(Outcome::ok(match format {
            Format::Text => format!("valid weight mod {} ({count} axiom instances checked)\n", w.modulus()),
            Format::Json => to_json(&json!({ "valid": true, "m": w.modulus(), "instances": count })),
        })),
        Err(e @ WeightError::Violation { .. }) => {
            let WeightError::Violation { axiom, witness } = &e else { unreachable!() };
            let one: Vec<usize> = witness.0.iter().map(|v| v + 1).collect();
            Ok(Outcome::with(
                EXIT_VIOLATION,
                match format {
                    Format::Text => format!("invalid: {e}\n"),
                    Format::Json => to_json(&json!({ "valid": false, "axiom": axiom.to_string(), "witness": one })),
                },
            ))
        }
        Err(e) => Err(input_error(e)),
    }
}

fn solve(
    format: Format,
    bpath: &Path,
    m: u64,
    limit: usize,
    truncate: bool,
    contains: Option<&Path>,
) -> Result<Outcome, Failure> {
    let b = load_biquandle(bpath)?;
    let space = solve_weight_space(&b, m).map_err(input_error)?;
    let listed = if limit > 0 { space.enumerate(limit, truncate).map_err(input_error)? } else { Vec::new() };
    let member = match contains {
        Some(p) => {
            let w = load_weight(p)?;
            Some((p.display().to_string(), space.coordinates(&w)))
        }
        None => None,
    };
    let code = match &member {
        Some((_, None)) => EXIT_VIOLATION,
        _ => EXIT_OK,
    };
    let stdout = match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "weights mod {m}: {} elements", space.count());
            let orders: Vec<String> = space.orders().iter().map(u64::to_string).collect();
            let _ = writeln!(out, "generator orders: [{}]", orders.join(", "));
            for (i, (g, o)) in space.generators().iter().zip(space.orders()).enumerate() {
                let _ = writeln!(out, "generator {} (order {o}): {}", i + 1, tensor_text(g));
            }
            for (i, w) in listed.iter().enumerate() {
                let _ = writeln!(out, "weight {}: {}", i + 1, tensor_text(w));
            }
            if let Some((name, coords)) = &member {
                match coords {
                    Some(c) => {
                        let c: Vec<String> = c.iter().map(u64::to_string).collect();
                        let _ = writeln!(out, "{name}: in the space, coordinates [{}]", c.join(", "));
                    }
                    None => {
                        let _ = writeln!(out, "{name}: not in the space");
                    }
                }
            }
            out
        }
        Format::Json => {
            let gens: Vec<_> = space.generators().iter().map(|g| WeightJson::from_weight(g).tensor).collect();
            let list: Vec<_> = listed.iter().map(|w| WeightJson::from_weight(w).tensor).collect();
            let mut doc = json!({
                "m": m,
                "count": space.count().to_string(),
                "orders": space.orders(),
                "generators": gens,
                "weights": list,
            });
            if let Some((_, coords)) = &member {
                doc["contains"] = json!({ "member": coords.is_some(), "coordinates": coords });
            }
            to_json(&doc)
        }
    };
    Ok(Outcome::with(code, stdout))
}

fn tensor_text(w: &ArrowWeight) -> String {
    serde_json::to_string(&WeightJson::from_weight(w).tensor).expect("serializable")
}

fn read_code(source: &CodeSource) -> Result<GaussDiagram, Failure> {
    let text = match (&source.code, &source.code_file) {
        (Some(c), None) => c.clone(),
        (None, Some(p)) => {
            let raw =
                std::fs::read_to_string(p).map_err(|e| input_error(format!("cannot read {}: {e}", p.display())))?;
            raw.lines().filter(|l| !l.trim_start().starts_with('#')).collect::<Vec<_>>().join("")
        }
        _ => return Err(input_error("give exactly one of --code and --code-file")),
    };
    parse_gauss_code(&text).map_err(input_error)
}

fn invariant(format: Format, source: &CodeSource, bpath: &Path, wpath: &Path) -> Result<Outcome, Failure> {
    let d = read_code(source)?;
    let (b, w) = load_pair(bpath, wpath)?;
    let v = compute_invariant(&d, &b, &w).map_err(input_error)?;
    Ok(Outcome::ok(match format {
        Format::Text => {
            let ms: Vec<String> = v.multiset().iter().map(u64::to_string).collect();
            format!("{}\nmultiset: {{{}}}\n", v.polynomial(), ms.join(", "))
        }
        Format::Json => {
            let j = InvariantJson::from(&v);
            to_json(&json!({ "m": j.m, "counts": j.counts, "polynomial": v.polynomial() }))
        }
    }))
}

fn classify_cmd(format: Format, table: &Path, bpath: &Path, wpath: &Path) -> Result<Outcome, Failure> {
    let records = load_table(table).map_err(input_error)?;
    let (b, w) = load_pair(bpath, wpath)?;
    let report = classify(&records, &b, &w).map_err(input_error)?;
    Ok(Outcome::ok(match format {
        Format::Text => report.to_text(),
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
    }))
}

fn fuzz_cmd(
    format: Format,
    source: &CodeSource,
    bpath: &Path,
    wpath: &Path,
    cfg: FuzzConfig,
) -> Result<Outcome, Failure> {
    let d = read_code(source)?;
    let (b, w) = load_pair(bpath, wpath)?;
    let report = fuzz(&d, &b, &w, cfg).map_err(input_error)?;
    let code = if report.passed() { EXIT_OK } else { EXIT_VIOLATION };
    let stdout = match format {
        Format::Text => {
            let mut out = String::new();
            if report.passed() {
                let _ = writeln!(out, "pass: {} walks of {} moves, seed {}", report.trials, report.steps, report.seed);
            } else {
                let _ = writeln!(out, "FAIL: {} of {} walks changed the value", report.failures.len(), report.trials);
                for f in &report.failures {
                    let _ = writeln!(
                        out,
                        "  trial {} (seed {}): {} -> {}, colorings {} -> {}, code {}",
                        f.trial, f.seed, f.before, f.after, f.count_before, f.count_after, f.code
                    );
                }
            }
            out
        }
        Format::Json => to_json(&json!({ "pass": report.passed(), "report": report })),
    };
    Ok(Outcome::with(code, stdout))
}
