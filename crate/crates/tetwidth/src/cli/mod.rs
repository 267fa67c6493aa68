//! The `tetwidth` command line tool.
//!
//! Exit codes: 0 on success, 1 when the input violates a mathematical
//! precondition or a check fails, 2 on a malformed command line.

mod check;
mod crush;
mod gen;
mod hyp;
mod width;

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use tetwidth_core::MultiGraph;

use crate::formats::{read_dot, read_gr, read_triangulation};

#[derive(Parser, Debug)]
#[command(name = "tetwidth", version, about = "Width parameters of 3-manifold triangulations")]
pub struct Cli {
    /// Print machine-readable JSON reports.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for commands that process several inputs.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a triangulation.
    #[command(subcommand)]
    Gen(gen::GenCommand),
    /// Carving-width or treewidth of a graph or of a triangulation's dual graph.
    Width(width::WidthArgs),
    /// Crush a normal surface, or run the one-vertex pipeline.
    Crush(crush::CrushArgs),
    /// Validate a decomposition, replay a certificate, or test the Bienstock bounds.
    Check(check::CheckArgs),
    /// Greedy net of a finite metric given as a CSV distance matrix.
    Net(hyp::NetArgs),
    /// Tabulate volume and net-size bounds.
    Bounds(hyp::BoundsArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    Cw,
    Tw,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Heuristic,
}

/// Where generated files go.
#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Output file; standard output when absent.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Also write the dual graph in DOT format.
    #[arg(long)]
    pub emit_dot: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

pub(crate) fn domain(e: impl Display) -> CliError {
    CliError::Domain(e.to_string())
}

pub(crate) fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// A command's result: a JSON value and its text rendering.
pub struct Report {
    pub json: Value,
    pub text: String,
}

pub(crate) fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| domain(format!("{}: {e}", path.display())))
}

pub(crate) fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| domain(format!("{}: {e}", path.display())))
}

pub(crate) fn with_path<E: Display>(path: &Path) -> impl Fn(E) -> CliError + '_ {
    move |e| domain(format!("{}: {e}", path.display()))
}

/// A graph from `.gr`, `.dot`, or a triangulation JSON file (its dual graph).
/// Other extensions are sniffed from the first character.
pub(crate) fn read_graph(path: &Path) -> Result<MultiGraph, CliError> {
    let text = read(path)?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let json = ext == "json" || (ext != "gr" && ext != "dot" && text.trim_start().starts_with('{'));
    if json {
        let tri = read_triangulation(&text).map_err(with_path(path))?;
        tri.dual_graph().map_err(with_path(path))
    } else if ext == "dot" || text.trim_start().starts_with("graph") {
        read_dot(&text).map_err(with_path(path))
    } else {
        read_gr(&text).map_err(with_path(path))
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    if cli.threads == 0 {
        return Err(usage("--threads must be at least 1"));
    }
    match &cli.command {
        Command::Gen(cmd) => gen::run(cli, cmd),
        Command::Width(args) => width::run(cli, args),
        Command::Crush(args) => crush::run(args),
        Command::Check(args) => check::run(args),
        Command::Net(args) => hyp::net(args),
        Command::Bounds(args) => hyp::bounds(args),
    }
}

/// Parses the process arguments, runs, prints, and returns the exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            0
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::json!({ "ok": false, "error": e.message(), "exitCode": e.code() }));
            } else {
                eprintln!("error: {}", e.message());
            }
            e.code()
        }
    }
}
