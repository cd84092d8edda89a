//! The `lrc` command line: construct codes, evaluate bounds, verify
//! properties and regenerate comparison tables.
//!
//! Everything runs through [`run`], which returns the text to print and the
//! exit code so tests can drive the tool without spawning a process.

pub mod bounds;
pub mod construct;
pub mod formats;
pub mod manifest;
pub mod report;
pub mod verify;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] lrc_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid JSON in {path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{0}")]
    Format(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(lrc_core::Error::BudgetExceeded { .. }) => "budget",
            CliError::Core(_) => "core",
            CliError::Io { .. } => "io",
            CliError::Json { .. } | CliError::Format(_) => "format",
            CliError::Usage(_) => "usage",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "lrc", version, about = "Locally recoverable code workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Write a run manifest (arguments, seed, file digests) here.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for exhaustive verification.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and print it as JSON.
    #[command(subcommand)]
    Construct(construct::ConstructCmd),
    /// Evaluate a bound formula.
    #[command(subcommand)]
    Bound(bounds::BoundCmd),
    /// Check a property of a code read from JSON.
    Verify(verify::VerifyArgs),
    /// Regenerate a comparison table or figure data as CSV.
    Report(report::ReportArgs),
}

/// What a command produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub exit: i32,
    pub inputs: Vec<PathBuf>,
    pub outputs: Vec<PathBuf>,
}

impl Outcome {
    pub fn text(stdout: String) -> Self {
        Outcome { stdout, ..Default::default() }
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read_file(path)?).map_err(|source| CliError::Json { path: path.to_owned(), source })
}

/// Runs a parsed command line, honouring `--out` and `--manifest`.
pub fn run(cli: &Cli, argv: &[String]) -> Result<Outcome, CliError> {
    let started = manifest::unix_now();
    let mut out = match &cli.command {
        Command::Construct(c) => construct::run(c, cli)?,
        Command::Bound(b) => bounds::run(b, cli)?,
        Command::Verify(v) => verify::run(v, cli)?,
        Command::Report(r) => report::run(r, cli)?,
    };
    if let Some(path) = &cli.out {
        write_file(path, &out.stdout)?;
        out.outputs.push(path.clone());
        out.stdout.clear();
    }
    if let Some(path) = &cli.manifest {
        let m = manifest::RunManifest::new(argv, cli, started, &out)?;
        write_file(path, &(serde_json::to_string_pretty(&m).expect("manifest serializes") + "\n"))?;
    }
    Ok(out)
}
