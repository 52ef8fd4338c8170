//! `powerlab`: build power graphs of finite abelian groups, compute their
//! invariants, and verify a catalog of structural claims over enumerated
//! group families.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//! 3 capacity exceeded, 4 internal error.

mod commands;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "powerlab", version, about = "Power graphs of finite abelian groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a power graph and report its invariants.
    Analyze(AnalyzeArgs),
    /// Run claim checkers over an order range and write verdict reports.
    Verify(VerifyArgs),
    /// List all abelian groups of an order or order range.
    Enumerate(EnumerateArgs),
    /// Export a power graph as DOT, JSON or an edge list.
    Export(ExportArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Group spec: comma-separated cyclic factor orders ("4,2", "6") or a
    /// canonical name ("C4xC2").
    spec: String,
    /// Analyze the proper power graph (identity removed).
    #[arg(long, conflicts_with = "full")]
    proper: bool,
    /// Analyze the full power graph (default).
    #[arg(long)]
    full: bool,
    /// Report format.
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also export the graph as Graphviz DOT (optionally to FILE).
    #[arg(long, num_args = 0..=1, default_missing_value = "", value_name = "FILE")]
    dot: Option<String>,
    /// Also export the graph as JSON (optionally to FILE).
    #[arg(long, num_args = 0..=1, default_missing_value = "", value_name = "FILE")]
    json: Option<String>,
    /// Also export the graph as a plain edge list (optionally to FILE).
    #[arg(long, num_args = 0..=1, default_missing_value = "", value_name = "FILE")]
    edgelist: Option<String>,
    /// Label DOT vertices q1/p2/r3 by element-order class.
    #[arg(long)]
    order_class_labels: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 2)]
    min_order: u64,
    #[arg(long, default_value_t = 64)]
    max_order: u64,
    /// Comma-separated theorem ids, or "all".
    #[arg(long, default_value = "all")]
    theorems: String,
    /// Comma-separated families (all-abelian, cyclic, exponent-p, mixed-23,
    /// noncyclic-pn), or "all".
    #[arg(long, default_value = "all")]
    families: String,
    /// Directory for the verdict report files.
    #[arg(long, default_value = "powerlab-reports")]
    output_dir: PathBuf,
    /// Report file format.
    #[arg(long, default_value = "json", value_parser = ["json", "text"])]
    format: String,
    /// Worker threads (0 = automatic). Does not affect report bytes.
    #[arg(long, default_value_t = 0)]
    parallelism: usize,
    /// Cross-check invariants against brute-force oracles where sizes allow.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// A single order ("8") or an inclusive range ("2..12").
    range: String,
}

#[derive(Args)]
struct ExportArgs {
    /// Group spec, as for analyze.
    spec: String,
    #[arg(long, conflicts_with = "full")]
    proper: bool,
    #[arg(long)]
    full: bool,
    /// Export format.
    #[arg(long, value_parser = ["dot", "json", "edgelist"])]
    format: String,
    /// Write here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Label DOT vertices q1/p2/r3 by element-order class.
    #[arg(long)]
    order_class_labels: bool,
}

/// CLI failure classes mapped to distinct exit codes.
enum CliError {
    /// A checker did not match its expected status (exit 1).
    VerificationFailed(String),
    /// Bad arguments or unparsable input (exit 2).
    Usage(String),
    /// An order cap was exceeded (exit 3).
    Capacity(String),
    /// I/O or invariant failures inside the toolkit (exit 4).
    Internal(String),
}

impl From<powerlab_core::Error> for CliError {
    fn from(e: powerlab_core::Error) -> Self {
        use powerlab_core::Error::*;
        match e {
            OrderCapExceeded { .. } => CliError::Capacity(e.to_string()),
            InvalidSpec { .. } | ZeroOrder | UnknownFormat(_) | UnknownFamily(_)
            | UnknownTheorem(_) => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(args) => commands::analyze(args),
        Command::Verify(args) => commands::verify(args),
        Command::Enumerate(args) => commands::enumerate(args),
        Command::Export(args) => commands::export(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerificationFailed(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(4)
        }
    }
}
