//! Command-line front end. Every verb reads JSON files and writes one JSON
//! document to stdout (or `--out`).
//!
//! Exit codes: 0 success, 1 domain-level negative, 2 input error. Errors are
//! written to stderr as `{"error": code, "message": text}`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::ideal::Ideal;
use crate::invariants::{column_class, divisor_chain, rank};
use crate::json::*;
use crate::matrix::Matrix;
use crate::oracle::{self, ScanConfig, DEFAULT_PAIR_CEILING};
use crate::realize::{chain_violation, check_triple, Outcome, Triple};
use crate::ring::Ring;
use crate::smith;

#[derive(Parser, Debug)]
#[command(name = "detdiv", version, about = "Determinantal divisors over Z and Z[sqrt(-5)]")]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct Input {
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Determinantal and elementary divisors, rank and column class.
    Divisors(Input),
    /// k-th compound matrix.
    Compound {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Smith normal form with certificates (Z only).
    Smith(Input),
    /// Equivalence test, with P and Q over Z.
    Equivalent {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Validity of a divisor chain.
    CheckChain(Input),
    /// Realizability verdict for a triple file.
    CheckTriple(Input),
    /// Realizability verdict for three chain files.
    Realize {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        c: PathBuf,
    },
    /// Block normal form of diag(A, 0) for nonsingular A over Z.
    BlockForm(Input),
    /// Brute-force oracle scans.
    OracleScan(ScanArgs),
    /// Check the block lemma on a list of rank-1 2x2 blocks.
    VerifyLemma(Input),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Check {
    /// Collect realized triples.
    Realized,
    /// Check the divisibility bounds on every pair.
    Bounds,
    /// Compare the realizability checker against the scan (n = 2, Z).
    Cross,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long)]
    n: usize,
    /// Entries (or coordinates) range over [-bound, bound].
    #[arg(long)]
    bound: i64,
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: Mode,
    #[arg(long, default_value = "Z", value_parser = parse_ring)]
    ring: Ring,
    #[arg(long)]
    det_bound: Option<u64>,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "realized")]
    check: Check,
    #[arg(long, default_value_t = DEFAULT_PAIR_CEILING)]
    pair_ceiling: u128,
}

fn parse_ring(s: &str) -> Result<Ring, String> {
    Ring::parse(s).ok_or_else(|| format!("unknown ring {s:?}"))
}

/// Input failures, each with a distinct machine-readable code.
#[derive(Debug)]
struct Failure {
    code: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::RingMismatch(..) => "ring-mismatch",
            Error::DimensionMismatch(..) | Error::NotSquare => "dimension-mismatch",
            Error::Malformed(_) => "malformed-json",
            Error::Unsupported(_) | Error::DimensionCap { .. } => "unsupported",
            Error::ScanTooLarge { .. } => "scan-too-large",
            Error::SearchExhausted(_) => "search-exhausted",
            _ => "invalid-input",
        };
        Failure { code, message: e.to_string() }
    }
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure { code: "io", message: format!("{}: {e}", path.display()) })?;
    serde_json::from_str(&text)
        .map_err(|e| Failure { code: "malformed-json", message: format!("{}: {e}", path.display()) })
}

fn read_matrix(path: &Path) -> Result<Matrix, Failure> {
    Ok(matrix_from_json(&read_json(path)?)?)
}

/// Raw determinantal list of a chain file, without validity checks.
fn read_divisors(path: &Path) -> Result<(Ring, Vec<Ideal>), Failure> {
    let v = read_json(path)?;
    let ring = ring_from_json(v.get("ring").unwrap_or(&Value::Null))?;
    let list = |key: &str| -> Result<Option<Vec<Ideal>>, Failure> {
        match v.get(key) {
            None => Ok(None),
            Some(Value::Array(xs)) => Ok(Some(xs.iter().map(|x| ideal_from_json(ring, x)).collect::<Result<_, _>>()?)),
            Some(other) => Err(Error::Malformed(format!("\"{key}\" must be a list, got {other}")).into()),
        }
    };
    if let Some(d) = list("d")? {
        return Ok((ring, d));
    }
    let e = list("e")?.ok_or_else(|| Failure::from(Error::Malformed("chain needs a \"d\" or \"e\" list".into())))?;
    let mut d = Vec::with_capacity(e.len());
    let mut acc = Ideal::unit(ring);
    for x in &e {
        acc = acc.mul(x)?;
        d.push(acc.clone());
    }
    Ok((ring, d))
}

fn verdict_exit(outcome: Outcome) -> i32 {
    if outcome == Outcome::NotRealizable {
        1
    } else {
        0
    }
}

fn execute(verb: Verb) -> Result<(Value, i32), Failure> {
    match verb {
        Verb::Divisors(i) => {
            let m = read_matrix(&i.input)?;
            let chain = divisor_chain(&m)?;
            let class = if m.is_zero() { Value::Null } else { json!(column_class(&m)?.label()) };
            let mut out = chain_to_json(&chain);
            out["rank"] = json!(rank(&m));
            out["columnClass"] = class;
            Ok((out, 0))
        }
        Verb::Compound { input, k } => {
            let m = read_matrix(&input.input)?;
            Ok((matrix_to_json(&m.compound(k)?), 0))
        }
        Verb::Smith(i) => {
            let m = read_matrix(&i.input)?;
            let s = smith::smith_normal_form(&m)?;
            let ok = s.verify(&m)?;
            Ok((smith_to_json(&s, ok), if ok { 0 } else { 1 }))
        }
        Verb::Equivalent { a, b } => {
            let (a, b) = (read_matrix(&a)?, read_matrix(&b)?);
            let eq = smith::equivalent(&a, &b)?;
            let mut out = json!({ "equivalent": eq, "P": null, "Q": null });
            if eq && a.ring() == Ring::Z {
                if let Some((p, q)) = smith::transform_certificate(&a, &b)? {
                    out["P"] = matrix_to_json(&p);
                    out["Q"] = matrix_to_json(&q);
                }
            }
            Ok((out, if eq { 0 } else { 1 }))
        }
        Verb::CheckChain(i) => {
            let (ring, d) = read_divisors(&i.input)?;
            let violated = chain_violation(&d)?;
            let out = json!({
                "ring": ring.name(),
                "d": Value::Array(d.iter().map(ideal_to_json).collect()),
                "valid": violated.is_none(),
                "violated": violated,
            });
            Ok((out, if violated.is_none() { 0 } else { 1 }))
        }
        Verb::CheckTriple(i) => {
            let t = triple_from_json(&read_json(&i.input)?)?;
            let v = check_triple(&t)?;
            Ok((verdict_to_json(&v), verdict_exit(v.outcome)))
        }
        Verb::Realize { a, b, c } => {
            let (ra, a) = read_divisors(&a)?;
            let (rb, b) = read_divisors(&b)?;
            let (rc, c) = read_divisors(&c)?;
            ra.check_same(rb)?;
            ra.check_same(rc)?;
            let v = check_triple(&Triple::new(ra, a, b, c)?)?;
            Ok((verdict_to_json(&v), verdict_exit(v.outcome)))
        }
        Verb::BlockForm(i) => {
            let m = read_matrix(&i.input)?;
            let f = smith::block_normal_form(&m)?;
            let lhs = f.p.mul(&smith::pad_with_zero(&m))?.mul(&f.q)?;
            let ok = lhs == f.assembled()?;
            Ok((block_form_to_json(&f, ok), if ok { 0 } else { 1 }))
        }
        Verb::OracleScan(s) => {
            let mut cfg = match s.mode {
                Mode::Exhaustive => ScanConfig::exhaustive(s.ring, s.n, s.bound),
                Mode::Sampled => ScanConfig::sampled(s.ring, s.n, s.bound, s.samples, s.seed),
            }
            .with_pair_ceiling(s.pair_ceiling);
            if let Some(d) = s.det_bound {
                cfg = cfg.with_det_bound(d);
            }
            let report = match s.check {
                Check::Realized => oracle::enumerate_realized_triples(&cfg)?,
                Check::Bounds => oracle::verify_bound_theorems(&cfg)?,
                Check::Cross => oracle::cross_check_checker(&cfg)?,
            };
            Ok((report_to_json(s.ring, &report)?, if report.ok() { 0 } else { 1 }))
        }
        Verb::VerifyLemma(i) => {
            let v = read_json(&i.input)?;
            let blocks = v
                .get("blocks")
                .and_then(Value::as_array)
                .ok_or_else(|| Failure::from(Error::Malformed("expected {\"blocks\": [matrix, ...]}".into())))?
                .iter()
                .map(matrix_from_json)
                .collect::<Result<Vec<_>, _>>()?;
            let r = smith::verify_block_lemma(&blocks)?;
            Ok((lemma_to_json(&r), if r.passed() { 0 } else { 1 }))
        }
    }
}

fn emit_error(err: &mut dyn Write, code: &str, message: &str) {
    let _ = writeln!(err, "{}", json!({ "error": code, "message": message }));
}

/// Runs one invocation, writing to the given streams. `argv[0]` is the
/// program name.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                ErrorKind::InvalidSubcommand | ErrorKind::MissingSubcommand => {
                    emit_error(err, "unknown-verb", e.to_string().trim());
                    2
                }
                _ => {
                    emit_error(err, "usage", e.to_string().trim());
                    2
                }
            };
        }
    };
    let (value, code) = match execute(cli.verb) {
        Ok(r) => r,
        Err(f) => {
            emit_error(err, f.code, &f.message);
            return 2;
        }
    };
    let text = serde_json::to_string_pretty(&value).expect("serializable") + "\n";
    match cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                emit_error(err, "io", &format!("{}: {e}", path.display()));
                return 2;
            }
        }
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    code
}

/// Runs one invocation against the process stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
