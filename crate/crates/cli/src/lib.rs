//! Command-line front end: argument parsing, dispatch and the exit-code contract.
//!
//! Exit codes: 0 success, 1 usage or domain or I/O error, 2 numerical non-convergence,
//! 3 tolerance breach under `--strict`.

pub mod args;
pub mod commands;
pub mod output;

use std::io::Write;
use std::path::PathBuf;
use std::time::SystemTime;

use angspec_core::Error;
use clap::Parser;

use crate::args::{Cli, Command, OutputArgs};
use crate::output::Envelope;

/// Directory that relative `--out` paths resolve against.
pub const OUT_DIR_ENV: &str = "ANGSPEC_OUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;
pub const EXIT_BREACH: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot serialize output: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(
                Error::NoConvergence { .. }
                | Error::Unresolved { .. }
                | Error::RadialBoxTooSmall { .. },
            ) => EXIT_NUMERICAL,
            _ => EXIT_USAGE,
        }
    }
}

/// Runs one invocation (`argv[0]` is the program name) with the process streams.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

/// Like [`run`], writing to the given streams.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let (name, output, outcome) = match &cli.command {
        Command::Identities(a) => ("identities", &a.output, commands::identities(a)?),
        Command::Angular(a) => ("angular", &a.output, commands::angular(a)?),
        Command::Wavefunction(a) => ("wavefunction", &a.output, commands::wavefunction(a)?),
        Command::Potential(a) => ("potential", &a.output, commands::potential(a)?),
        Command::Spectrum2d(a) => ("spectrum2d", &a.output, commands::spectrum2d(a)?),
        Command::Spectrum3b(a) => ("spectrum3b", &a.output, commands::spectrum3b(a)?),
        Command::Reductions(a) => ("reductions", &a.output, commands::reductions(a)?),
        Command::Oracle(a) => ("oracle", &a.output, commands::oracle(a)?),
    };
    let envelope = Envelope {
        command: name,
        params: outcome.params,
        generated_at: (!output.deterministic)
            .then(|| humantime::format_rfc3339_seconds(SystemTime::now()).to_string()),
        reports: outcome.reports,
        payload: outcome.payload,
    };
    let text = envelope.render(output.format)?;
    emit(output, &text, out)?;
    Ok(if output.strict && outcome.breach {
        EXIT_BREACH
    } else {
        EXIT_OK
    })
}

/// Resolves `--out` against [`OUT_DIR_ENV`] when relative.
pub fn output_path(out: &std::path::Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if out.is_relative() && !dir.is_empty() => PathBuf::from(dir).join(out),
        _ => out.to_path_buf(),
    }
}

fn emit(output: &OutputArgs, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match &output.out {
        Some(path) => {
            let path = output_path(path);
            std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })
        }
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}
