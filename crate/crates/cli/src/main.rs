//! Command-line front end: every verdict comes straight from the library.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Validate,
    SphericalRoots,
    ValuationCone,
    Orbits,
    Canonical,
    EssentialPairs,
    Enveloping,
    Abelianization,
    Hilbert,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "symemb", version, about = "Exact combinatorics of symmetric-space embeddings")]
#[command(group(ArgGroup::new("source").required(true).args(["input", "space"])))]
pub struct Args {
    pub command: Command,
    /// JSON input document.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Name of a built-in catalog entry.
    #[arg(long)]
    pub space: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Generator-degree bound for every bounded search.
    #[arg(long, default_value_t = 4)]
    pub bound: usize,
}

/// Failures of the input itself, as opposed to misuse of the tool.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Invalid(String),
    /// The input was read but fails a check; the report is still printed.
    Rejected { output: String, reason: String },
}

impl From<symemb::Error> for Failure {
    fn from(e: symemb::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&args) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Rejected { output, reason }) => {
            print!("{output}");
            eprintln!("error: {reason}");
            ExitCode::from(2)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
