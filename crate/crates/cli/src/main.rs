//! `startop`: command-line access to the star-topology library.

mod commands;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

pub const SCHEMA: &str = "startop/1";

#[derive(Parser)]
#[command(name = "startop", version, about = "Finite topology on simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for matrix and cohomology exports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum MatrixKind {
    /// 0/1 intersection matrix L.
    Connection,
    /// Green matrix g_m (see --order and --region).
    Green,
    /// Exterior derivative d.
    Derivative,
    /// Hodge Laplacian (d + dᵀ)².
    Hodge,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum RegionArg {
    Star,
    Ball,
    Sphere,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    Energy,
    Gaussbonnet,
    Lefschetz,
    Valuation,
    Refinement,
}

/// Inputs are paths to facet or graph JSON files, or registry keys such as
/// `octahedron` or `cycle:5`.
#[derive(Subcommand)]
enum Command {
    /// Write the facet list (or graph) of a registry complex. `random:N:M`
    /// draws a graph with N vertices and M edges using --seed.
    Gen {
        key: String,
        #[arg(long)]
        graph: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Invariants of a complex.
    Report {
        input: String,
        /// Enumerate all open sets, up to --limit.
        #[arg(long)]
        topology_count: bool,
        #[arg(long, default_value_t = 1_000_000)]
        limit: usize,
    },
    /// Sphere, ball, manifold and contractibility verdicts.
    Recognize { input: String },
    /// Run a property suite over the registry and seeded random complexes.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random complexes.
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Homeomorphism test with certificate.
    Homeo {
        a: String,
        b: String,
        #[arg(long, default_value_t = 2)]
        max_refine: usize,
        /// Search nodes before giving up.
        #[arg(long, default_value_t = 200_000)]
        budget: usize,
    },
    /// Barycentric refinement, or edge refinement of the 1-skeleton with --edge.
    Refine {
        input: String,
        #[arg(long, value_parser = parse_edge)]
        edge: Option<(u32, u32)>,
    },
    /// Export a matrix in canonical simplex order.
    Matrix {
        input: String,
        #[arg(long, value_enum)]
        kind: MatrixKind,
        #[arg(long, default_value_t = 1)]
        order: usize,
        #[arg(long, value_enum, default_value_t = RegionArg::Star)]
        region: RegionArg,
    },
    /// Betti numbers.
    Betti { input: String },
    /// Interaction cohomology Betti numbers.
    Wubetti { input: String },
    /// Lefschetz number and fixed-point index sum of a vertex map.
    Lefschetz { input: String, map: PathBuf },
}

fn parse_edge(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or("expected A,B")?;
    let p = |t: &str| t.trim().parse::<u32>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

/// How a command ended, mapped to the process exit code.
pub enum Failure {
    /// A checked property does not hold (exit 1).
    Property(Value),
    /// Unreadable input (exit 2).
    Parse(String),
    /// A limit or search budget ran out (exit 3).
    Budget(Value),
}

pub type Outcome = Result<String, Failure>;

pub fn to_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fmt = cli.format;
    let result = match cli.command {
        Command::Gen { key, graph, seed, output } => commands::gen(&key, graph, seed, output.as_deref()),
        Command::Report { input, topology_count, limit } => commands::report(&input, topology_count, limit),
        Command::Recognize { input } => commands::recognize(&input),
        Command::Verify { suite, seed, count } => verify::run(suite, seed, count),
        Command::Homeo { a, b, max_refine, budget } => commands::homeo(&a, &b, max_refine, budget),
        Command::Refine { input, edge } => commands::refine(&input, edge),
        Command::Matrix { input, kind, order, region } => commands::matrix(&input, kind, order, region, fmt),
        Command::Betti { input } => commands::betti(&input, fmt),
        Command::Wubetti { input } => commands::wubetti(&input, fmt),
        Command::Lefschetz { input, map } => commands::lefschetz(&input, &map),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Property(v)) => {
            print!("{}", to_json(&v));
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(v)) => {
            print!("{}", to_json(&v));
            ExitCode::from(3)
        }
    }
}
