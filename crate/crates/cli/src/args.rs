use clap::{Args, Parser, Subcommand, ValueEnum};
use netgof_core::Method;
use std::path::PathBuf;

/// Goodness-of-fit tests for random-graph (GER) models of networks.
#[derive(Debug, Parser)]
#[command(name = "netgof", version, about)]
pub struct Cli {
    /// Worker threads for parallel replicates.
    #[arg(long, global = true, env = "NETGOF_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test whether an edge list is consistent with a homogeneous random graph.
    Test(TestArgs),
    /// Generate a random network as a canonical edge list.
    Gen(GenArgs),
    /// Enumerate the exact induced edge-count distribution of a small network.
    ExactDist(ExactDistArgs),
    /// Run a significance, power or timing study.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    #[value(alias = "approximation")]
    Approx,
    Empirical,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Approx => Method::Approximation,
            MethodArg::Empirical => Method::Empirical,
        }
    }
}

#[derive(Debug, Args)]
pub struct TestArgs {
    /// Edge list, one "u v" pair per line.
    pub file: PathBuf,
    #[arg(long, value_enum, default_value = "approx")]
    pub method: MethodArg,
    /// Nodes per sampled subgraph (default: variance-maximising size).
    #[arg(long = "k")]
    pub subgraph_size: Option<usize>,
    /// Number of sampled subgraphs.
    #[arg(long = "n")]
    pub n_subgraphs: Option<usize>,
    /// Simulated networks for the empirical test.
    #[arg(long = "r")]
    pub replicates: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Declared node count, for isolated nodes absent from the file.
    #[arg(long)]
    pub nodes: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Gnp,
    Gnm,
    TwoColour,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub model: Model,
    #[arg(long)]
    pub nodes: usize,
    /// Edge count (gnm).
    #[arg(long)]
    pub edges: Option<u64>,
    /// Edge probability (gnp).
    #[arg(long)]
    pub p: Option<f64>,
    /// Target mean degree (two-colour).
    #[arg(long)]
    pub mean_degree: Option<f64>,
    /// Heterogeneity ratio in [0, 1] (two-colour).
    #[arg(long)]
    pub ratio: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExactDistArgs {
    pub file: PathBuf,
    #[arg(long = "k")]
    pub subgraph_size: usize,
    #[arg(long)]
    pub nodes: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Study {
    Significance,
    Power,
    Timing,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(value_enum)]
    pub study: Study,
    /// Network sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,
    /// Mean degrees, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<f64>>,
    /// Heterogeneity ratios for the power study, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub ratios: Option<Vec<f64>>,
    /// Networks (or timed runs) per cell.
    #[arg(long)]
    pub reps: Option<usize>,
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[arg(long)]
    pub n_subgraphs: Option<usize>,
    #[arg(long)]
    pub replicates: Option<usize>,
    #[arg(long = "k")]
    pub subgraph_size: Option<usize>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write rows as CSV here.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Write rows as JSON here.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Start from the full published grid instead of the desk-scale one.
    #[arg(long = "paper-scale")]
    pub full_grid: bool,
}
