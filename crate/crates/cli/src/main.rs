mod commands;
mod config;
mod render;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use sheffer_core::Error;

use config::{Cli, Command};

/// Failures that stop a command before it produces a report.
#[derive(Debug)]
pub enum CliError {
    /// Bad names, parameters or combinations of options.
    Usage(String),
    /// The requested index does not fit the truncation order, or a series
    /// or operator computation could not be carried out.
    Capacity(String),
    Io(String),
}

impl CliError {
    pub fn io(e: impl std::fmt::Display) -> CliError {
        CliError::Io(e.to_string())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Capacity(m) => write!(f, "capacity error: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::OrderTooSmall { .. } | Error::Series(_) | Error::Operator(_) => {
                CliError::Capacity(format!("{e}; raise --order"))
            }
            Error::InvalidParameter { .. }
            | Error::UnknownPair(_)
            | Error::UnknownReduction(_)
            | Error::UnknownRow(_)
            | Error::UnknownSuite(_) => CliError::Usage(e.to_string()),
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(CliError::io),
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(CliError::io),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Expand(args) => {
            let text = commands::expand(&args)?;
            emit(&text, args.output.out.as_deref())?;
            Ok(0)
        }
        Command::List(args) => {
            let text = commands::list(&args)?;
            emit(&text, args.output.out.as_deref())?;
            Ok(0)
        }
        Command::Verify(args) => {
            let report = verify::run(&args)?;
            let text = verify::render(&report, args.output.format)?;
            emit(&text, args.output.out.as_deref())?;
            Ok(u8::from(report.failures() > 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("sheffer: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
