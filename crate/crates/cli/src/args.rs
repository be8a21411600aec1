//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Default node limit for the exhaustive searches.
pub const DEFAULT_BUDGET_NODES: u64 = 200_000_000;

#[derive(Debug, Parser)]
#[command(name = "girthram", version, about = "Ramsey-type constructions with girth constraints: sampling, verification, bounds and exact search")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Global {
    /// Node limit for exhaustive searches (0 = unlimited).
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET_NODES)]
    pub budget_nodes: u64,
    /// Wall-clock limit in seconds for exhaustive searches.
    #[arg(long, global = true)]
    pub budget_secs: Option<f64>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// key=value file supplying defaults for any flag; flags win.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true, env = "THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremArg {
    Cycles,
    Ap,
    Cliques,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternArg {
    Cycle,
    Clique,
    Ap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RamseyKindArg {
    Clique,
    Cycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleKind {
    /// G(n, p).
    Graph,
    /// [n]_p.
    Subset,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Derive the constant chain of a construction.
    Params(ParamsArgs),
    /// Sample G(n, p) or [n]_p.
    Sample(SampleArgs),
    /// Girth of a graph, or sparsity girth of a hypergraph.
    Girth(GirthArgs),
    /// Short cycles of a hypergraph, or cycle counts of a graph.
    Cycles(CyclesArgs),
    /// Search for a proper colouring of a hypergraph.
    Colour(ColourArgs),
    /// Decide whether a graph or interval arrows a pattern.
    Arrows(ArrowsArgs),
    /// Small Ramsey numbers of cliques and cycles.
    Ramsey(RamseyArgs),
    /// Small van der Waerden numbers.
    Vdw(VdwArgs),
    /// Extremal numbers ex(n; C_3, ..., C_m).
    Extremal(ExtremalArgs),
    /// Check the progression dichotomy for (r+1)-colourings of [n].
    FactVdw(FactVdwArgs),
    /// Check the extremal premise giving f_r(2k) <= n.
    Fact7(Fact7Args),
    /// Bounds on f_r(k).
    Fbounds(FboundsArgs),
    /// Run seeded trials of a desk-scale construction (JSONL).
    Trials(TrialsArgs),
    /// Verify a colouring, or a graph's girth.
    Verify(VerifyArgs),
}

impl Cmd {
    pub fn name(&self) -> &'static str {
        match self {
            Cmd::Params(_) => "params",
            Cmd::Sample(_) => "sample",
            Cmd::Girth(_) => "girth",
            Cmd::Cycles(_) => "cycles",
            Cmd::Colour(_) => "colour",
            Cmd::Arrows(_) => "arrows",
            Cmd::Ramsey(_) => "ramsey",
            Cmd::Vdw(_) => "vdw",
            Cmd::Extremal(_) => "extremal",
            Cmd::FactVdw(_) => "fact-vdw",
            Cmd::Fact7(_) => "fact7",
            Cmd::Fbounds(_) => "fbounds",
            Cmd::Trials(_) => "trials",
            Cmd::Verify(_) => "verify",
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ParamsArgs {
    #[arg(long, value_enum)]
    pub theorem: TheoremArg,
    #[arg(short, long)]
    pub k: u64,
    #[arg(short, long)]
    pub r: u64,
    /// Girth parameter (ap, cliques).
    #[arg(short, long, default_value_t = 3)]
    pub g: u64,
    /// R(C_k; r), W = vdW(k, r) or R(K_k; r), depending on the theorem.
    #[arg(short = 'R', long, short_alias = 'W', alias = "W")]
    pub size: u64,
    /// Working precision in bits.
    #[arg(long, default_value_t = 128)]
    pub precision: u32,
    /// Also run the analytic container-condition check.
    #[arg(long)]
    pub container: bool,
    /// Divide eps by this factor in the container check.
    #[arg(long, default_value = "1")]
    pub eps_divisor: String,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SampleArgs {
    #[arg(long, value_enum, default_value = "graph")]
    pub kind: SampleKind,
    #[arg(short, long)]
    pub n: u64,
    #[arg(short, long)]
    pub p: f64,
    /// PRNG seed; generated and recorded when absent.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Resample G(n, p) until its girth is at least this value.
    #[arg(long)]
    pub reject_girth: Option<usize>,
    #[arg(long, default_value_t = 10_000)]
    pub max_tries: u64,
    /// Write the graph (graph format) or set (one integer per line) here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GirthArgs {
    #[arg(long, conflicts_with = "hypergraph", required_unless_present = "hypergraph")]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub hypergraph: Option<PathBuf>,
    /// Sparsity target for a hypergraph.
    #[arg(short, long)]
    pub g: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CyclesArgs {
    #[arg(long, conflicts_with = "hypergraph", required_unless_present = "hypergraph")]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub hypergraph: Option<PathBuf>,
    /// Hypergraph: report cycles shorter than g. Graph: count cycles of
    /// length 3..g.
    #[arg(short, long)]
    pub g: usize,
    /// List every cycle, not only the counts.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ColourArgs {
    #[arg(long)]
    pub hypergraph: PathBuf,
    #[arg(short, long)]
    pub r: u32,
    /// Write a proper colouring here when one is found.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ArrowsArgs {
    #[arg(long, value_enum)]
    pub kind: PatternArg,
    #[arg(short, long)]
    pub k: usize,
    #[arg(short, long)]
    pub r: u32,
    /// Base graph file (cycle, clique).
    #[arg(long, conflicts_with_all = ["complete", "interval"])]
    pub graph: Option<PathBuf>,
    /// Base graph K_n (cycle, clique).
    #[arg(long, conflicts_with = "interval")]
    pub complete: Option<usize>,
    /// Base interval [N] (ap).
    #[arg(long)]
    pub interval: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct RamseyArgs {
    #[arg(long, value_enum)]
    pub kind: RamseyKindArg,
    #[arg(short, long)]
    pub k: usize,
    #[arg(short, long)]
    pub r: u32,
    /// Decide K_n -> (F)_r for this n instead of sweeping.
    #[arg(short, long)]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VdwArgs {
    #[arg(short, long)]
    pub k: usize,
    #[arg(short, long)]
    pub r: u32,
    /// Decide [N] -> (AP_k)_r for this N instead of sweeping.
    #[arg(short = 'N', long = "N")]
    pub big_n: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ExtremalArgs {
    #[arg(short, long)]
    pub n: usize,
    /// Forbid all cycles of length 3..=m.
    #[arg(short, long)]
    pub m: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FactVdwArgs {
    #[arg(short, long)]
    pub k: usize,
    #[arg(short, long)]
    pub r: u32,
    #[arg(short = 'W', long = "W")]
    pub w: u64,
    /// Colouring of [n] with r + 1 colours.
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    pub colouring: Option<PathBuf>,
    /// Check this many uniformly random colourings of [n] instead.
    #[arg(long, requires = "n")]
    pub random: Option<u64>,
    #[arg(short, long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Skip verifying [W] -> (AP_k)_r.
    #[arg(long)]
    pub trust_w: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Fact7Args {
    #[arg(short, long)]
    pub n: u64,
    #[arg(short, long)]
    pub r: u64,
    /// Half the cycle length: the premise concerns f_r(2k).
    #[arg(short, long)]
    pub k: u64,
    /// ex(n; C_3..C_{2k-1}); searched when absent.
    #[arg(long)]
    pub ex_low: Option<u64>,
    /// ex(n; C_3..C_{2k}); searched when absent.
    #[arg(long)]
    pub ex_high: Option<u64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FboundsArgs {
    #[arg(short, long)]
    pub k: u64,
    #[arg(short, long)]
    pub r: u64,
    /// R(C_k; r) for the upper bound.
    #[arg(short = 'R', long = "R", conflicts_with = "search_ramsey")]
    pub ramsey: Option<u64>,
    /// Compute R(C_k; r) by exhaustive search.
    #[arg(long)]
    pub search_ramsey: bool,
    #[arg(long, default_value_t = 128)]
    pub precision: u32,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TrialsArgs {
    #[arg(long, value_enum)]
    pub theorem: TheoremArg,
    #[arg(short, long)]
    pub n: u64,
    #[arg(short, long)]
    pub k: usize,
    /// Girth target (ap, cliques).
    #[arg(short, long, default_value_t = 4)]
    pub g: usize,
    #[arg(short, long, default_value_t = 2)]
    pub r: u32,
    /// Edge or element probability.
    #[arg(short, long, conflicts_with = "scale")]
    pub p: Option<f64>,
    /// Scale c in p = c * n^(-a/b) with the construction's exponent
    /// (default 0.5 when neither p nor scale is given).
    #[arg(long)]
    pub scale: Option<f64>,
    #[arg(long, default_value_t = 10)]
    pub trials: u64,
    /// Base seed; trial i uses seed + i. Generated and recorded when absent.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Deletion cap (default floor(0.1 * p * positions)).
    #[arg(long)]
    pub cap: Option<u64>,
    /// Write JSONL here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Record per-trial wall time (breaks byte-identical reruns).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long, requires = "colouring", conflicts_with = "graph")]
    pub hypergraph: Option<PathBuf>,
    #[arg(long)]
    pub colouring: Option<PathBuf>,
    #[arg(long, requires = "girth", required_unless_present = "hypergraph")]
    pub graph: Option<PathBuf>,
    /// Required girth of the graph.
    #[arg(long)]
    pub girth: Option<usize>,
}
