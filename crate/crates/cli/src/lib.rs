//! Library half of the `qlin` command-line tool: argument definitions, file
//! formats and command implementations. `main.rs` only forwards to [`run`].

pub mod commands;
pub mod formats;

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BackendKind {
    /// Exact state-vector simulator.
    Sim,
}

#[derive(Debug, Parser)]
#[command(name = "qlin", version, about = "Build, inspect and simulate quantum circuits")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// RNG seed. Required with `--format json`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub shots: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, value_enum, default_value_t = BackendKind::Sim)]
    pub backend: BackendKind,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a circuit on |0…0⟩ and histogram the measured bitstrings.
    Simulate { circuit: PathBuf },
    /// Print the n-qubit quantum Fourier transform circuit.
    Qft {
        #[arg(long)]
        n: usize,
    },
    /// Draw a circuit as text.
    Draw { circuit: PathBuf },
    /// Convert a circuit to OpenQASM 2.0.
    ExportQasm { circuit: PathBuf },
    /// Peephole-optimise a circuit.
    Optimise {
        circuit: PathBuf,
        /// Write the optimised circuit here.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Depth and gate counts.
    Stats { circuit: PathBuf },
    /// Toss a quantum coin once per shot.
    Coin,
    /// Repeat-until-success with the built-in two-qubit example.
    Rus {
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Variational eigensolver by random search.
    Vqe {
        #[arg(long)]
        ham: PathBuf,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        #[arg(long, default_value_t = 60)]
        k: usize,
        #[arg(long, default_value_t = 1000)]
        nsamples: usize,
    },
    /// QAOA for MAXCUT by random search.
    Qaoa {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 50)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        p: usize,
    },
}

/// Failure class, mapped to the process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    Parse,
    Runtime,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Usage => 1,
            ErrorKind::Parse => 2,
            ErrorKind::Runtime => 3,
        }
    }

    fn tag(self) -> &'static str {
        match self {
            ErrorKind::Usage => "usage",
            ErrorKind::Parse => "parse",
            ErrorKind::Runtime => "runtime",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { kind: ErrorKind::Usage, message: message.into() }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self { kind: ErrorKind::Parse, message: message.into() }
    }

    pub fn runtime(message: impl Into<String>) -> Self {
        Self { kind: ErrorKind::Runtime, message: message.into() }
    }
}

/// Always a single line: `error[<kind>]: <message>`.
impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_line = self.message.split_whitespace().collect::<Vec<_>>().join(" ");
        write!(f, "error[{}]: {one_line}", self.kind.tag())
    }
}

impl std::error::Error for CliError {}

impl From<qlin_core::algorithms::AlgorithmError> for CliError {
    fn from(e: qlin_core::algorithms::AlgorithmError) -> Self {
        Self::runtime(e.to_string())
    }
}

impl From<qlin_core::DeviceError> for CliError {
    fn from(e: qlin_core::DeviceError) -> Self {
        Self::runtime(e.to_string())
    }
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, A>(args: I) -> Outcome
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind as K;
            return match e.kind() {
                K::DisplayHelp | K::DisplayVersion => {
                    Outcome { code: 0, stdout: e.to_string(), stderr: String::new() }
                }
                _ => {
                    let first = e.to_string();
                    let first = first.lines().next().unwrap_or("");
                    let msg = first.strip_prefix("error: ").unwrap_or(first);
                    failure(CliError::usage(msg))
                }
            };
        }
    };
    match commands::dispatch(&cli) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => failure(e),
    }
}

fn failure(e: CliError) -> Outcome {
    Outcome {
        code: e.kind.exit_code(),
        stdout: String::new(),
        stderr: format!("{e}\n"),
    }
}
