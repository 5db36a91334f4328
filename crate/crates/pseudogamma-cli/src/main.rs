//! `pseudogamma` — evaluation and verification harness.
//!
//! Three subcommands:
//!
//! * `eval <target> --re <x> [--im <y>]` — one function at one point,
//!   printed as `(log_mod, arg)` plus cartesian form when representable;
//! * `verify <suite>` — runs a verification suite (`theorem1`, `symmetry`,
//!   `factors`, `funceq`, `prop2`, or `all`) and writes a JSON report;
//! * `scan <target>` — evaluates over an interval or circle grid and
//!   writes plot-ready CSV.
//!
//! Exit codes: `0` success (all asserted checks hold), `1` a verification
//! assertion failed, `2` configuration or domain error (domain diagnostics
//! name the governing equation). `PSEUDOGAMMA_THREADS` caps the worker
//! pool for scans; outputs are byte-deterministic for a fixed
//! configuration (report timestamps live in a separate `meta` field).

mod config;
mod csvout;
mod run;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use std::process::ExitCode;

use config::{CliError, GlobalOpts, GridOpts, RunConfig, SuiteArg, TargetArg};

#[derive(Debug, Parser)]
#[command(
    name = "pseudogamma",
    version,
    about = "Evaluate the pseudo-gamma function and verify its published bounds"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function at one point and print it.
    Eval {
        /// Function to evaluate.
        #[arg(value_enum)]
        target: TargetArg,
        /// Real part of s.
        #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
        re: f64,
        /// Imaginary part of s.
        #[arg(
            long,
            value_name = "REAL",
            default_value_t = 0.0,
            allow_negative_numbers = true
        )]
        im: f64,
    },
    /// Run a verification suite and emit a structured JSON report.
    Verify {
        /// Suite to run.
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Interval point(s) u for the factors suite (repeatable).
        #[arg(long = "u", value_name = "REAL")]
        u: Vec<f64>,
        /// Circle radius(es) for the prop2 suite (repeatable).
        #[arg(long = "r-tilde", value_name = "REAL")]
        r_tilde: Vec<f64>,
        /// Angles per prop2 circle (minimum 8).
        #[arg(long, value_name = "INT")]
        n_angles: Option<usize>,
    },
    /// Evaluate a function over a grid and emit plot-ready CSV.
    Scan {
        /// Function to scan.
        #[arg(value_enum)]
        target: TargetArg,
        #[command(flatten)]
        grid: GridOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_threads() {
        eprintln!("{e}");
        return ExitCode::from(e.exit_code());
    }
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let cfg = RunConfig::resolve(&cli.global)?;
    match cli.command {
        Command::Eval { target, re, im } => {
            run::cmd_eval(&cfg, target, Complex64::new(re, im))
        }
        Command::Verify {
            suite,
            u,
            r_tilde,
            n_angles,
        } => run::cmd_verify(&cfg, suite, &u, &r_tilde, n_angles),
        Command::Scan { target, grid } => run::cmd_scan(&cfg, target, &grid),
    }
}

/// Honors `PSEUDOGAMMA_THREADS` as a cap on the scan worker pool.
fn init_threads() -> Result<(), CliError> {
    match std::env::var("PSEUDOGAMMA_THREADS") {
        Ok(v) => {
            let n: usize = v.trim().parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
                CliError::Config(format!(
                    "PSEUDOGAMMA_THREADS must be a positive integer, got {v:?}"
                ))
            })?;
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| CliError::Config(format!("thread pool: {e}")))
        }
        Err(std::env::VarError::NotPresent) => Ok(()),
        Err(e) => Err(CliError::Config(format!("PSEUDOGAMMA_THREADS: {e}"))),
    }
}
