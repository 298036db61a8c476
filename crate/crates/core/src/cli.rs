//! Command-line front end. `run` takes the argument list and output streams
//! and returns the process exit code, so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 verification or reproduction failure, 2 usage,
//! parse or shape error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{block_bounds, pair_bounds, row_bounds, self_bounds, spectral_sum_bounds, two_by_two_bounds};
use crate::error::{Error, Result};
use crate::matcore::io::{read_block, read_matrix};
use crate::matcore::{BlockMatrix, ComplexMatrix};
use crate::repro::run_repro;
use crate::spectra::{numerical_radius, spectral_summary};
use crate::verify::{run_suite, CheckId, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "numrad", version, about = "Numerical radius bounds for operator matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print numerical radius, operator norm and spectral radius of a square matrix file.
    Radius { file: PathBuf },
    /// Print a bound report next to the directly computed quantity it bounds.
    ///
    /// pair: A B. block: one block file. 2x2: A B C D. row: A B. self: T.
    /// spectral-sum: A1 B1 A2 B2 ...
    Bounds {
        kind: BoundKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Run the seeded property suite; exits 1 on any violation.
    Verify {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Inclusive matrix side range, `lo:hi`.
        #[arg(long, default_value = "2:5", value_parser = parse_dims)]
        dims: (usize, usize),
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Comma-separated check names; all checks when omitted.
        #[arg(long, value_delimiter = ',', value_parser = parse_check)]
        checks: Option<Vec<CheckId>>,
    },
    /// Recompute every embedded reference value; exits 1 if any is off.
    Repro {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BoundKind {
    Pair,
    Block,
    #[value(name = "2x2")]
    TwoByTwo,
    Row,
    #[value(name = "self")]
    SelfBound,
    SpectralSum,
}

fn parse_dims(s: &str) -> std::result::Result<(usize, usize), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo: usize = lo.trim().parse().map_err(|e| format!("{lo}: {e}"))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("{hi}: {e}"))?;
    if lo == 0 || lo > hi {
        return Err(format!("need 1 <= lo <= hi, got {lo}:{hi}"));
    }
    Ok((lo, hi))
}

fn parse_check(s: &str) -> std::result::Result<CheckId, String> {
    s.trim().parse().map_err(|e: Error| e.to_string())
}

fn expect_files(kind: &str, files: &[PathBuf], count: usize) -> Result<Vec<ComplexMatrix>> {
    if files.len() != count {
        return Err(Error::Invalid(format!(
            "bounds {kind} takes {count} file(s), got {}",
            files.len()
        )));
    }
    files.iter().map(read_matrix).collect()
}

#[derive(Serialize)]
struct WithTruth<R: Serialize> {
    kind: &'static str,
    #[serde(flatten)]
    report: R,
    /// The quantity being bounded, computed directly.
    truth: Truth,
}

#[derive(Serialize)]
#[serde(rename_all = "snake_case")]
enum Truth {
    /// `sup |<Ax, y>| + |<By, x>|` over unit `x`, `y`.
    SupInnerSum(f64),
    Omega(f64),
    SpectralRadius(f64),
}

fn to_json<R: Serialize>(kind: &'static str, report: R, truth: Truth) -> Result<String> {
    Ok(serde_json::to_string_pretty(&WithTruth { kind, report, truth })?)
}

fn bounds_json(kind: BoundKind, files: &[PathBuf]) -> Result<String> {
    match kind {
        BoundKind::Pair => {
            let m = expect_files("pair", files, 2)?;
            let (a, b) = (&m[0], &m[1]);
            let report = pair_bounds(a, b)?;
            // phases can be aligned, so the supremum is 2 ω([[O, B], [A, O]])
            let zb = ComplexMatrix::zeros(b.rows(), b.rows());
            let za = ComplexMatrix::zeros(a.rows(), a.rows());
            let t = BlockMatrix::two_by_two(&zb, b, a, &za)?;
            to_json(
                "pair",
                report,
                Truth::SupInnerSum(2.0 * numerical_radius(&t.assemble())?),
            )
        }
        BoundKind::Block => {
            if files.len() != 1 {
                return Err(Error::Invalid(format!(
                    "bounds block takes 1 file, got {}",
                    files.len()
                )));
            }
            let t = read_block(&files[0])?;
            let report = block_bounds(&t)?;
            to_json("block", report, Truth::Omega(numerical_radius(&t.assemble())?))
        }
        BoundKind::TwoByTwo => {
            let m = expect_files("2x2", files, 4)?;
            let report = two_by_two_bounds(&m[0], &m[1], &m[2], &m[3])?;
            let t = BlockMatrix::two_by_two(&m[0], &m[1], &m[2], &m[3])?;
            to_json("2x2", report, Truth::Omega(numerical_radius(&t.assemble())?))
        }
        BoundKind::Row => {
            let m = expect_files("row", files, 2)?;
            let (a, b) = (&m[0], &m[1]);
            let report = row_bounds(a, b)?;
            let zc = ComplexMatrix::zeros(b.cols(), a.cols());
            let zd = ComplexMatrix::zeros(b.cols(), b.cols());
            let t = BlockMatrix::two_by_two(a, b, &zc, &zd)?;
            to_json("row", report, Truth::Omega(numerical_radius(&t.assemble())?))
        }
        BoundKind::SelfBound => {
            let m = expect_files("self", files, 1)?;
            let report = self_bounds(&m[0])?;
            to_json("self", report, Truth::Omega(numerical_radius(&m[0])?))
        }
        BoundKind::SpectralSum => {
            if !files.len().is_multiple_of(2) {
                return Err(Error::Invalid(format!(
                    "bounds spectral-sum takes pairs A_i B_i, got {} files",
                    files.len()
                )));
            }
            let m: Vec<ComplexMatrix> = files.iter().map(read_matrix).collect::<Result<_>>()?;
            let a: Vec<_> = m.iter().step_by(2).cloned().collect();
            let b: Vec<_> = m.iter().skip(1).step_by(2).cloned().collect();
            let report = spectral_sum_bounds(&a, &b)?;
            let r = report.r_direct;
            to_json("spectral-sum", report, Truth::SpectralRadius(r))
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::NoConvergence { .. } => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Radius { file } => {
            let a = read_matrix(&file)?;
            writeln!(out, "{}", serde_json::to_string(&spectral_summary(&a)?)?)?;
            Ok(EXIT_OK)
        }
        Command::Bounds { kind, files } => {
            writeln!(out, "{}", bounds_json(kind, &files)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            trials,
            dims,
            seed,
            checks,
        } => {
            let config = SuiteConfig {
                trials,
                dims,
                seed,
                checks: checks.unwrap_or_else(|| CheckId::ALL.to_vec()),
            };
            let report = run_suite(&config)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Repro { json } => {
            let report = run_repro()?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                write!(out, "{}", report.table())?;
            }
            Ok(if report.passed { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

/// Parse `args` (including the program name), run the command and return
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            // --help and --version
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}
