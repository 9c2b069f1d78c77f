//! Command-line front end for `ulrich-core`.
//!
//! [`run`] parses arguments, dispatches to the library and writes a
//! deterministic text or JSON report. Exit codes: 0 on success, 1 when a
//! checked statement turns out false, 2 on usage or input errors.

mod args;
mod commands;
mod selftest;

use std::io::Write;

use clap::Parser;
use serde::Serialize;
use serde_json::Value;

pub use args::Cli;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] ulrich_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
}

/// Result of one command before formatting.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub note: &'static str,
    pub result: Value,
    pub text: Vec<String>,
    pub exit_code: i32,
}

impl Report {
    fn new(command: &'static str, note: &'static str, result: Value, text: Vec<String>) -> Self {
        Report { command, note, result, text, exit_code: EXIT_OK }
    }

    fn falsified_unless(mut self, holds: bool) -> Self {
        if !holds {
            self.exit_code = EXIT_FALSIFIED;
        }
        self
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    command: &'a str,
    argv: &'a [String],
    provenance: &'a str,
    result: &'a Value,
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn run<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let json = cli.json;
    match commands::dispatch(cli) {
        Ok(report) => {
            let written = if json {
                let envelope = Envelope {
                    schema_version: SCHEMA_VERSION,
                    command: report.command,
                    argv: argv.get(1..).unwrap_or_default(),
                    provenance: report.note,
                    result: &report.result,
                };
                serde_json::to_string_pretty(&envelope)
                    .map_err(std::io::Error::other)
                    .and_then(|s| writeln!(out, "{s}"))
            } else {
                report.text.iter().try_for_each(|line| writeln!(out, "{line}"))
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            report.exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
