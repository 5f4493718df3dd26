use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use plmc_core::algos::{Algorithm, DEFAULT_RESTARTS};
use plmc_core::generator::DEFAULT_COPY_BUDGET;
use plmc_core::reduction::{EmbedStrategy, DEFAULT_HOST_BUDGET};

use crate::table::OutputFormat;

#[derive(Debug, Parser)]
#[command(name = "plmc", version, about = "Power-law multigraphs and MAX-CUT")]
pub struct Cli {
    /// key=value file whose entries act as flags; explicit flags win.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Commands,
}

#[derive(Debug, Subcommand)]
pub enum Commands {
    /// Generate a random (alpha, beta) power-law multigraph.
    Generate(GenerateArgs),
    /// Run a MAX-CUT algorithm on a graph file.
    Solve(SolveArgs),
    /// Tabulate the closed-form and exact-sum analytics.
    Analyze(AnalyzeArgs),
    /// Embed a 3-regular graph into a power-law host.
    Reduce(ReduceArgs),
    /// Run algorithms over a grid of generated instances.
    Bench(BenchArgs),
}

/// Power-law parameters: `--alpha` directly, or `--target-nodes N` to pick
/// `alpha = ln(N / zeta(beta))` for `beta > 1`.
#[derive(Debug, Clone, Args)]
pub struct PlgArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long, conflicts_with = "alpha", value_name = "N")]
    pub target_nodes: Option<f64>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub plg: PlgArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Graph file to write.
    #[arg(short, long)]
    pub out: PathBuf,
    /// Generation report (JSON); defaults to `<out>.report.json`.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Largest admissible number of matching copies (degree sum).
    #[arg(long, default_value_t = DEFAULT_COPY_BUDGET)]
    pub copy_budget: u64,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Algorithm::ALL.iter().map(|a| a.name()).collect();
        format!("unknown algorithm `{s}` (expected one of {})", names.join(", "))
    })
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Hyperplane roundings for gw and beta-gt2.
    #[arg(long, default_value_t = DEFAULT_RESTARTS)]
    pub restarts: usize,
    /// Accuracy parameter of the PTAS variants.
    #[arg(long, default_value_t = 0.25)]
    pub eps: f64,
    /// Largest connected component the exact solver accepts.
    #[arg(long, env = "PLMC_ORACLE_LIMIT")]
    pub oracle_limit: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub graph: PathBuf,
    #[arg(long, value_parser = parse_algorithm)]
    pub algo: Algorithm,
    #[command(flatten)]
    pub solver: SolverArgs,
    /// Parameters the split PTAS assumes for the instance.
    #[command(flatten)]
    pub plg: PlgArgs,
    /// Starting cut for local search.
    #[arg(long)]
    pub start: Option<PathBuf>,
    /// Reject repeated vertex pairs in the graph file.
    #[arg(long)]
    pub strict: bool,
    /// Result JSON; stdout when absent.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Cut file; defaults to `<out>.cut` when `--out` is given.
    #[arg(long)]
    pub cut: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct TableOut {
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(subcommand)]
    pub what: Analysis,
}

#[derive(Debug, Subcommand)]
pub enum Analysis {
    /// Inapproximability ratio for beta > 2.
    Hardness {
        /// Values: list and/or start:end:step.
        #[arg(long)]
        beta: String,
        #[command(flatten)]
        out: TableOut,
    },
    /// Expected approximation ratio of the SDP algorithm with leaf preprocessing.
    GwBound {
        #[arg(long)]
        beta: String,
        #[arg(long, default_value = "1")]
        mu: String,
        #[arg(long, default_value_t = plmc_core::plg::ALPHA_GW)]
        alpha_gw: f64,
        #[command(flatten)]
        out: TableOut,
    },
    /// Exact interval sizes and volumes against their envelopes.
    Intervals {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        /// Also split `[1, Δ]` at `xΔ`.
        #[arg(long)]
        x: Option<f64>,
        #[command(flatten)]
        out: TableOut,
    },
    /// Exact vertex and edge totals against the asymptotic estimates.
    Estimates {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[command(flatten)]
        out: TableOut,
    },
    /// Core-strength bound for beta = 1, optionally measured on generated graphs.
    CoreStrength {
        #[arg(long)]
        alpha: String,
        /// Seeds to measure, e.g. `0:2`; bound only when absent.
        #[arg(long)]
        seeds: Option<String>,
        #[arg(long, default_value_t = DEFAULT_COPY_BUDGET)]
        copy_budget: u64,
        #[command(flatten)]
        out: TableOut,
    },
    /// Ratios behind the conditions of the functional case beta = 2 - 1/f(alpha).
    Functional {
        /// One of sqrt, ln, linear, square.
        #[arg(long, default_value = "sqrt")]
        f: String,
        #[arg(long)]
        alpha: String,
        /// Split point; `1/f(alpha)` when absent.
        #[arg(long)]
        x: Option<f64>,
        #[command(flatten)]
        out: TableOut,
    },
    /// Parameters of the high-degree split scheme.
    Split {
        #[arg(long)]
        eps: String,
        #[arg(long)]
        beta: String,
        #[command(flatten)]
        out: TableOut,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Auto,
    Multipath,
    Wheel,
}

impl From<StrategyArg> for EmbedStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => EmbedStrategy::Auto,
            StrategyArg::Multipath => EmbedStrategy::Multipath,
            StrategyArg::Wheel => EmbedStrategy::Wheel,
        }
    }
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    /// 3-regular input graph.
    pub graph: PathBuf,
    #[arg(long)]
    pub beta: f64,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    pub strategy: StrategyArg,
    /// Degree-3 vertices of the host: the input size plus a multiple of 4.
    #[arg(long)]
    pub degree3_count: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_HOST_BUDGET)]
    pub host_budget: u64,
    /// Size parameter of the gap thresholds (input has 104·n vertices).
    #[arg(long, requires = "eps")]
    pub n: Option<u64>,
    #[arg(long, requires = "n")]
    pub eps: Option<f64>,
    #[arg(long)]
    pub strict: bool,
    /// Output prefix; defaults to the input path without its extension.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub alpha: String,
    #[arg(long)]
    pub beta: String,
    #[arg(long, default_value = "0")]
    pub seeds: String,
    /// Comma-separated algorithm names.
    #[arg(long, default_value = "greedy,local,gw")]
    pub algos: String,
    #[arg(long, default_value_t = 0.25)]
    pub eps: f64,
    #[arg(long, default_value_t = DEFAULT_RESTARTS)]
    pub restarts: usize,
    #[arg(long, env = "PLMC_ORACLE_LIMIT")]
    pub oracle_limit: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_COPY_BUDGET)]
    pub copy_budget: u64,
    #[command(flatten)]
    pub out: TableOut,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
