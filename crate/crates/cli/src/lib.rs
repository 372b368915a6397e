//! Command-line front end: argument parsing, dispatch to the toolkit, and
//! the JSON run reports.
//!
//! Exit statuses are 0 for a decided run or a passing check, 1 for usage
//! errors, failures and failed checks, and 2 when a forcing question was
//! left undecided.

mod args;
mod commands;
mod report;
pub mod repro;

use std::io::Write;
use std::time::Instant;

use clap::Parser;

pub use args::{Cli, Command};
pub use report::RunReport;

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "ORDERSIZE_WORKERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;

/// Result of one command: the report (if any), text for standard output
/// that is not a report, and the exit status.
pub struct Outcome {
    pub status: i32,
    pub report: Option<RunReport>,
    pub stdout: String,
}

/// Parses `argv` (including the program name), runs the command, and writes
/// its output. Human-readable notes go to `err`.
pub fn dispatch<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return status;
        }
    };
    let start = Instant::now();
    match commands::run(&cli, err) {
        Ok(mut outcome) => {
            let _ = out.write_all(outcome.stdout.as_bytes());
            if let Some(report) = outcome.report.as_mut() {
                report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
                let json = report.to_json();
                match commands::report_path(&cli) {
                    Some(path) => {
                        if let Err(e) = std::fs::write(path, json + "\n") {
                            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                            return EXIT_ERROR;
                        }
                    }
                    None => {
                        let _ = writeln!(out, "{json}");
                    }
                }
            }
            outcome.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

/// Worker count from `--workers`, then the environment, then the number of
/// available cores.
pub fn resolve_workers(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var(WORKERS_ENV).ok().and_then(|v| v.parse().ok()))
        .or_else(|| std::thread::available_parallelism().ok().map(|n| n.get()))
        .unwrap_or(1)
        .max(1)
}
