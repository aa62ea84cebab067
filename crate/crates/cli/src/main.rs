//! `gicc`: validate, encode, verify and compare index codes built from
//! generalized interlinked cycle structures.
//!
//! Exit status: 0 pass, 1 structural or decode failure, 2 input error,
//! 3 exact oracle requested beyond its size gate.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::report::{CliResult, Status};

#[derive(Debug, Parser)]
#[command(name = "gicc", version, about = "Index coding on generalized interlinked cycle structures")]
struct Cli {
    /// Emit one JSON record on standard output instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check whether an inner vertex set makes the digraph a GIC.
    Validate(StructureArgs),
    /// Encode a message vector with the GIC code.
    Encode(EncodeArgs),
    /// Round-trip decode checks for every receiver.
    Verify(VerifyArgs),
    /// Cover the digraph with disjoint GIC parts.
    Cover(CoverArgs),
    /// Lower bounds, scheme lengths and the optimality verdict.
    Bounds(BoundsArgs),
    /// Table of GIC, cycle and clique cover lengths against MAIS.
    Compare(CompareArgs),
    /// Write a generated instance in the arc-list format.
    Generate(GenerateArgs),
    /// Search small digraphs for a GIC whose code is longer than its MAIS.
    ConjectureSweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct StructureArgs {
    /// Digraph in the arc-list format.
    pub graph: PathBuf,
    /// Inner vertex set, comma separated.
    #[arg(long)]
    pub inner: String,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    #[command(flatten)]
    pub structure: StructureArgs,
    /// Message file: `t=<bits>` then one hex line per vertex.
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    pub messages: Option<PathBuf>,
    /// Draw messages from a seeded generator.
    #[arg(long, requires_all = ["t", "seed"])]
    pub random: bool,
    /// Bits per message.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub structure: StructureArgs,
    /// Every message vector with one bit per vertex (N <= 20).
    #[arg(long, conflicts_with = "trials")]
    pub exhaustive_t1: bool,
    /// Number of random message vectors.
    #[arg(long, requires_all = ["t", "seed"])]
    pub trials: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    pub graph: PathBuf,
    /// Exhaustive search (at most 10 vertices).
    #[arg(long, conflicts_with = "budget", required_unless_present = "budget")]
    pub exact: bool,
    /// Validation budget for the seeded greedy search.
    #[arg(long, requires = "seed")]
    pub budget: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Largest vertex count for --exact (at most 20).
    #[arg(long, default_value_t = gicc_core::cover::EXACT_COVER_LIMIT)]
    pub exact_limit: usize,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    pub graph: PathBuf,
    /// Also compute the GF(2) minrank (at most 24 arcs).
    #[arg(long)]
    pub minrank: bool,
    /// Known inner vertex set of a GIC on the whole digraph.
    #[arg(long)]
    pub inner: Option<String>,
    /// Seed for the cover search on digraphs above the exact limit.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub limits: LimitArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub inner: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub limits: LimitArgs,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    /// Exhaustive GIC cover up to this many vertices (at most 20).
    #[arg(long, default_value_t = gicc_core::cover::EXACT_COVER_LIMIT)]
    pub exact_limit: usize,
    /// Exact cycle and clique covers up to this many vertices (at most 20).
    #[arg(long, default_value_t = gicc_core::cover::EXACT_BASELINE_LIMIT)]
    pub baseline_limit: usize,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub kind: GenerateKind,
    /// Write the digraph here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenerateKind {
    /// The 3K-2 vertex family with inner set 1..K.
    FamilyVb {
        #[arg(long)]
        k: usize,
    },
    /// Six-vertex 4-GIC with code x1^x2^x3^x4, x5^x2^x3, x6^x3^x4.
    Fig4a,
    /// Bidirectional complete digraph.
    Clique {
        #[arg(long)]
        n: usize,
    },
    /// Directed cycle 1 -> 2 -> ... -> n -> 1.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Interlinked-cycle description and its assembled digraph.
    Icc {
        #[arg(long)]
        k: usize,
        /// Path lengths, comma separated (default: all 1).
        #[arg(long)]
        paths: Option<String>,
        /// Connector lengths per ordered pair, row-major (default: all 0).
        #[arg(long)]
        connectors: Option<String>,
        #[arg(long)]
        seed: u64,
        /// Write the description here.
        #[arg(long)]
        description_out: Option<PathBuf>,
    },
    /// Independent arcs with probability p.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Enumerate every labelled digraph up to this order (at most 5).
    #[arg(long, default_value_t = 4)]
    pub exhaustive_max_n: usize,
    /// Additional random digraphs per order above the exhaustive range.
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
    /// Largest order for random samples.
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0.35)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn dispatch(command: &Command) -> CliResult {
    match command {
        Command::Validate(a) => commands::validate(a),
        Command::Encode(a) => commands::encode(a),
        Command::Verify(a) => commands::verify(a),
        Command::Cover(a) => commands::cover(a),
        Command::Bounds(a) => commands::bounds(a),
        Command::Compare(a) => commands::compare(a),
        Command::Generate(a) => commands::generate(a),
        Command::ConjectureSweep(a) => commands::conjecture_sweep(a),
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Validate(_) => "validate",
        Command::Encode(_) => "encode",
        Command::Verify(_) => "verify",
        Command::Cover(_) => "cover",
        Command::Bounds(_) => "bounds",
        Command::Compare(_) => "compare",
        Command::Generate(_) => "generate",
        Command::ConjectureSweep(_) => "conjecture-sweep",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { Status::InputError.code() } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    let status = match dispatch(&cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else if !report.text.is_empty() {
                println!("{}", report.text);
            }
            report.status
        }
        Err(e) => {
            eprintln!("error: {e}");
            if cli.json {
                let record = serde_json::json!({
                    "command": command_name(&cli.command),
                    "error": e.message,
                    "status": e.status,
                    "exit_code": e.status.code(),
                });
                println!("{record}");
            }
            e.status
        }
    };
    ExitCode::from(status.code() as u8)
}
