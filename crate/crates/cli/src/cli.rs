use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kpartite::rational::parse_decimal;
use kpartite::Rational;

#[derive(Debug, Parser)]
#[command(name = "kpartite", version, about = "Degree thresholds and Hamiltonicity tools for k-partite graphs")]
pub struct Cli {
    /// Print machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for parallel searches (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Seed for sampled searches.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print λ, μ, f, g, h1, h2, Φ and the per-part thresholds of a partition.
    Phi {
        /// Comma-separated non-increasing part sizes, e.g. 4,4,4.
        partition: String,
        #[arg(long, value_enum, default_value_t = ProfileArg::Exact)]
        mode: ProfileArg,
    },
    /// Build the extremal example for a partition and its certificate.
    Construct {
        partition: String,
        #[arg(long = "case", value_enum, default_value_t = CaseArg::Auto)]
        case: CaseArg,
        /// Graph output file; the certificate goes next to it as <stem>.cert.json.
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Check the minimum-degree condition with an additive slack.
    Check {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "gamma")]
        slack: Option<i64>,
        /// Slack as a fraction of n, rounded up.
        #[arg(long, value_parser = rational)]
        gamma: Option<Rational>,
    },
    /// Decide Hamiltonicity exactly.
    Hamilton {
        file: PathBuf,
        #[arg(long, default_value_t = kpartite::hamiltonicity::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Find a perfect fractional matching or a set that blocks one.
    Matching { file: PathBuf },
    /// Exhaustively check |N(S)| ≥ |S| over independent sets.
    WeakExpansion {
        file: PathBuf,
        /// Refuse graphs with more vertices than this.
        #[arg(long, default_value_t = 40)]
        limit: usize,
    },
    /// Test the robust-expander property.
    Expander {
        file: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Run the degree check, the extremal search and the expansion audits.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        search: SearchArgs,
        /// Search only unions of parts for the extremal set.
        #[arg(long)]
        heuristic_extremal: bool,
    },
    /// Build a Hamiltonian cycle from an extremal set.
    ExtremalCycle {
        file: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
        /// Comma-separated witness vertices; searched for when omitted.
        #[arg(long)]
        witness: Option<String>,
        #[arg(long, default_value_t = kpartite::hamiltonicity::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Tabulate the extremal examples over all partitions of n.
    Sweep {
        #[arg(long)]
        n: usize,
        /// Only partitions into this many parts (all k ≥ 2 when omitted).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 24)]
        max_n_solver: usize,
        #[arg(long, default_value_t = kpartite::hamiltonicity::DEFAULT_BUDGET)]
        budget: u64,
        /// CSV output file (stdout when omitted).
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ProfileArg {
    Exact,
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Auto,
    F,
    G,
    H1,
    H2,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Exact,
    Sampled,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, value_parser = rational, default_value = "0.1")]
    pub nu: Rational,
    #[arg(long, value_parser = rational, default_value = "0.25")]
    pub tau: Rational,
    #[arg(long, value_parser = rational, default_value = "0")]
    pub gamma: Rational,
    #[arg(long, value_parser = rational)]
    pub eta: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    /// Largest n searched exhaustively.
    #[arg(long, default_value_t = kpartite::expansion::DEFAULT_EXACT_CAP)]
    pub cap: usize,
}

fn rational(text: &str) -> Result<Rational, String> {
    parse_decimal(text).map_err(|e| e.to_string())
}
