//! Command-line front end.
//!
//! [`execute`] does all the work and returns the text destined for standard
//! output, so the binary and the tests share one path. Exit codes: 0 complete,
//! 1 incomplete result or I/O failure, 2 usage error, 3 resource limit.

mod commands;
mod manifest;

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::enumerate::FilterMode;
use crate::lowindex::{SubgroupMode, DEFAULT_MAX_INDEX};

pub use manifest::{sha256_hex, RunManifest};

/// Default `n` bound for `family`.
pub const DEFAULT_MAX_N: usize = 64;
/// Default search depth for `invariants` and `separate`.
pub const DEFAULT_SEARCH_INDEX: usize = 5;

#[derive(Debug, Parser)]
#[command(name = "starpres", version, about = "Star-graphs, special one-relator presentations and low-index invariants")]
pub struct Cli {
    /// Print the report as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write a run manifest with SHA-256 digests of every output to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    pub manifest: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// List the admissible length-9 relators over x, y, z.
    Enumerate(EnumerateArgs),
    /// Split relators into equivalence classes with replayable witnesses.
    Classify(ClassifyArgs),
    /// Report on the one-relator family P(n, alpha).
    Family(FamilyArgs),
    /// Abelianizations of low-index subgroups of one group.
    Invariants(InvariantsArgs),
    /// Separate the twelve builtin groups by low-index invariants.
    Separate(SeparateArgs),
    /// Analyse the star-graph of a presentation.
    Stargraph(StargraphArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Enumerate(_) => "enumerate",
            Command::Classify(_) => "classify",
            Command::Family(_) => "family",
            Command::Invariants(_) => "invariants",
            Command::Separate(_) => "separate",
            Command::Stargraph(_) => "stargraph",
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct EnumerateArgs {
    /// Star-graph test applied to each candidate.
    #[arg(long, value_enum, default_value_t = FilterMode::Exact)]
    pub mode: FilterMode,
    /// Word list destination, `-` for standard output.
    #[arg(long, short, default_value = "-")]
    pub output: String,
}

#[derive(Debug, Args, Serialize)]
pub struct ClassifyArgs {
    /// One word per line (compact or exponent notation), `-` for standard
    /// input. The builtin list of 32 words is used when omitted.
    pub input: Option<String>,
    /// Also replay every composition of the identification table.
    #[arg(long)]
    pub check_table: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct FamilyArgs {
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub alpha: usize,
    /// Largest n accepted.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct InvariantsArgs {
    /// Builtin group G1..G12.
    #[arg(long, short, conflicts_with = "relator")]
    pub group: Option<usize>,
    /// Relator in compact or exponent notation; repeat for several. With
    /// neither this nor --group the free group is used.
    #[arg(long, short)]
    pub relator: Vec<String>,
    #[arg(long, default_value_t = 3)]
    pub rank: usize,
    #[arg(long, default_value_t = DEFAULT_SEARCH_INDEX)]
    pub max_index: usize,
    #[arg(long, value_enum, default_value_t = SubgroupMode::All)]
    pub mode: SubgroupMode,
    /// Largest index accepted.
    #[arg(long, default_value_t = DEFAULT_MAX_INDEX)]
    pub index_bound: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct SeparateArgs {
    #[arg(long, default_value_t = DEFAULT_SEARCH_INDEX)]
    pub max_index: usize,
    /// Restrict to these builtin groups, e.g. `--groups 11,12`.
    #[arg(long, value_delimiter = ',')]
    pub groups: Vec<usize>,
    /// Largest index accepted.
    #[arg(long, default_value_t = DEFAULT_MAX_INDEX)]
    pub index_bound: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct StargraphArgs {
    /// Relators separated by commas, `-` for standard input.
    #[arg(conflicts_with = "file")]
    pub relators: Option<String>,
    /// Read relators from a file.
    #[arg(long, short)]
    pub file: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    pub rank: usize,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("line {line}: {message}")]
    Input { line: usize, message: String },
    #[error("resource limit: {0}")]
    Limit(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input { .. } => 2,
            CliError::Limit(_) => 3,
            CliError::Io { .. } => 1,
        }
    }
}

/// Result of a command: what goes to standard output, files written, and
/// whether the result is complete.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub stdout: String,
    pub files: Vec<(String, Vec<u8>)>,
    pub complete: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.complete {
            0
        } else {
            1
        }
    }
}

/// Runs a parsed command line, writing any output files and the manifest.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let outcome = commands::run(&cli.command, cli.json)?;
    for (path, bytes) in &outcome.files {
        fs::write(path, bytes).map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    if let Some(path) = &cli.manifest {
        let m = RunManifest::new(&cli.command, &outcome);
        let text = serde_json::to_string_pretty(&m).expect("manifest serializes") + "\n";
        fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    }
    Ok(outcome)
}

/// Entry point used by the binary.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("starpres: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Reads `path`, with `-` meaning standard input.
fn read_input(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}
