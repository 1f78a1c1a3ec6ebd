//! `rapoly`: build, realize and classify ideal right-angled polyhedra from
//! the command line.

mod args;
mod commands;
mod input;
mod output;
mod svg;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;

/// Exit status for malformed invocations.
const EXIT_USAGE: u8 = 64;
/// Exit status for inputs outside an operation's domain.
const EXIT_DOMAIN: u8 = 2;
/// Exit status when the solver or a search budget gives up.
const EXIT_SOLVER: u8 = 3;

/// Why a command failed, mapped onto an exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
    Solver(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Domain(_) => EXIT_DOMAIN,
            Failure::Solver(_) => EXIT_SOLVER,
            Failure::Io(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Solver(m) | Failure::Io(m) => m,
        }
    }
}

impl From<rapoly_core::Error> for Failure {
    fn from(e: rapoly_core::Error) -> Self {
        use rapoly_core::Error::*;
        match e {
            Domain(_) | Parse { .. } | Inconsistent(..) => Failure::Domain(e.to_string()),
            Solver { .. } | Budget { .. } | Decomposition(_) => Failure::Solver(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// What a command produced: text for stdout and the exit status.
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    pub fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("rapoly: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
