mod args;
mod run;

use std::process::ExitCode;

use clap::Parser;
use fqt_core::Error;

use args::Cli;

/// Raised when a reproduction case finishes with failed checks.
#[derive(Debug)]
pub struct Mismatch(pub String);

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for Mismatch {}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Mismatch>().is_some() {
        return 1;
    }
    match err.downcast_ref::<Error>() {
        Some(
            Error::TheoremViolation(_)
            | Error::EquivalenceViolation { .. }
            | Error::Io(_)
            | Error::Json(_)
            | Error::Csv(_)
            | Error::SchemaVersionMismatch { .. },
        ) => 1,
        Some(_) => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
