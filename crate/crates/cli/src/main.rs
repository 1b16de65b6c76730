//! Command-line front end for the graph analytics library: exact center
//! and eccentricity oracles, spanning trees with bounded eccentricity
//! distortion, additive all-pairs distance approximation, four-point
//! hyperbolicity scans, and an invariant verifier.

mod run;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "hyperecc",
    version,
    about = "Center, eccentricity and distance approximation for nearly tree-like graphs",
    after_help = "Exit codes: 0 ok, 1 invariant violation, 2 usage or parse error, 3 budget refusal.\n\
        Reruns with the same arguments and seed produce byte-identical output."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
pub struct InputArgs {
    /// Edge list file; names ending in .gz are decompressed transparently
    #[arg(long, value_name = "PATH", conflicts_with = "gen")]
    pub input: Option<PathBuf>,

    /// Generated graph: path:N, cycle:N, grid:RxC, star:LEAVES, complete:N, random:N,P, tree:N
    #[arg(long, value_name = "SPEC")]
    pub gen: Option<String>,

    /// Seed for generators and sampling; fixed so reruns match byte for byte
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Cap on BFS passes times edges and on stored matrix entries
    #[arg(long, value_name = "N")]
    pub budget: Option<u64>,

    /// Ignore every budget cap
    #[arg(long)]
    pub force: bool,

    /// Aligned text tables instead of TSV
    #[arg(long)]
    pub pretty: bool,

    /// Write the report here instead of stdout
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Size, radius, diameter, center geometry and four-point value
    Stats {
        #[command(flatten)]
        input: InputArgs,

        /// Quadruples to sample when the exact four-point scan is refused
        #[arg(long, value_name = "K", default_value_t = 100_000)]
        sample: u64,
    },

    /// Furthest-point pair, middle vertex, and the three tree strategies
    Trees {
        #[command(flatten)]
        input: InputArgs,

        /// Start vertex for the furthest-point iteration
        #[arg(long, default_value_t = 0)]
        start: u32,
    },

    /// Additive all-pairs distance approximation quality per slack value
    Distances {
        #[command(flatten)]
        input: InputArgs,

        /// Root vertex; defaults to the middle of a furthest-point pair
        #[arg(long)]
        root: Option<u32>,

        /// Evaluate this slack only instead of searching upward from zero
        #[arg(long, conflicts_with = "rho")]
        delta: Option<u32>,

        /// Use the synthetic stretched estimator (reports 2d+1) with this slack
        #[arg(long, conflicts_with = "sample")]
        rho: Option<u32>,

        /// Restrict statistics to K rows picked most distant from the root
        #[arg(long, value_name = "K")]
        sample: Option<usize>,

        /// Also write the packed estimate matrix to this file
        #[arg(long, value_name = "PATH")]
        dump_dhat: Option<PathBuf>,
    },

    /// Check proved inequalities on one graph, an estimate file, or the builtin suite
    Verify {
        #[command(flatten)]
        input: InputArgs,

        /// Start vertex for the furthest-point iteration
        #[arg(long, default_value_t = 0)]
        start: u32,

        /// Check a previously dumped estimate file against exact distances
        #[arg(long, value_name = "PATH")]
        dhat: Option<PathBuf>,
    },

    /// Four-point value, witness quadruple, and thinness bound
    Hyperbolicity {
        #[command(flatten)]
        input: InputArgs,

        /// Sample K quadruples instead of scanning exhaustively
        #[arg(long, value_name = "K")]
        sample: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run::dispatch(cli.command) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
