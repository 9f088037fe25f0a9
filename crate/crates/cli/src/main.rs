mod cli;
mod commands;
mod plot;

use std::process::ExitCode;

use clap::Parser;
use tropevol_core::Error;

use cli::{Cli, Commands};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String, std::io::Error),
    Parse(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Parse(msg) | CliError::Failed(msg) => write!(f, "{msg}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Guard { .. }) => 3,
            CliError::Core(Error::Mismatch(_)) | CliError::Failed(_) => 4,
            _ => 2,
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Commands::Volume {
            input,
            method,
            i,
            output,
        } => commands::volume(&input, method, i, &output),
        Commands::Ehrhart {
            input,
            b,
            kmax,
            log,
            i,
            output,
        } => commands::ehrhart(&input, b, kmax, log, i, &output),
        Commands::Check {
            seed,
            suite,
            cases,
            list,
            output,
        } => commands::check(seed, suite.as_deref(), cases, list, &output),
        Commands::Plot { input, b, output } => commands::plot(&input, b, &output),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
