use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ordersize", version, about = "Order-size forcing toolkit for 3-uniform hypergraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a construction in the text graph format.
    Construct(ConstructArgs),
    /// Decide (n, e) -> (m, f).
    CheckArrow(CheckArrowArgs),
    /// All forced edge counts for n <= 7.
    Scan(ScanArgs),
    /// Induced edge-count histogram of the m-subsets of a graph file.
    Histogram(HistogramArgs),
    /// Zero-density certificate for (m, f).
    CertifyZero(CertifyZeroArgs),
    /// Values surviving the necessary tetrahedral conditions, per m.
    FilterTetra(FilterArgs),
    /// Exact search for the tetrahedral equation over a range of m.
    SearchDio(SearchDioArgs),
    /// Edge density of the iterated construction over a range of n.
    Density(DensityArgs),
    /// Run a registered reproduction check.
    Repro(ReproArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    SeedH,
    Hn,
    Hnit,
    Gsnk,
    CanonicalPlus,
    CanonicalMinus,
    Sparse,
    Blowup,
}

/// A seed value, or `random`.
#[derive(Clone, Debug)]
pub enum SeedArg {
    Fixed(u64),
    Random,
}

impl std::str::FromStr for SeedArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "random" {
            return Ok(SeedArg::Random);
        }
        s.parse().map(SeedArg::Fixed).map_err(|_| format!("expected an integer or `random`, got `{s}`"))
    }
}

#[derive(Debug, Args)]
pub struct SeedOpt {
    /// Random seed, or `random` for a fresh one.
    #[arg(long)]
    pub seed: Option<SeedArg>,
}

impl SeedOpt {
    pub fn value(&self) -> u64 {
        match self.seed {
            None => crate::DEFAULT_SEED,
            Some(SeedArg::Fixed(s)) => s,
            Some(SeedArg::Random) => rand::random(),
        }
    }
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub kind: Kind,
    #[arg(long)]
    pub n: Option<usize>,
    /// Clique part size for gsnk and canonical graphs.
    #[arg(long)]
    pub k: Option<usize>,
    /// Crossing set S, e.g. `{}`, `1`, `2`, `12`.
    #[arg(long)]
    pub s: Option<String>,
    /// Sparsity order.
    #[arg(long)]
    pub m: Option<usize>,
    /// Blow-up factor.
    #[arg(long)]
    pub t: Option<usize>,
    /// Part-size cutoff for hnit.
    #[arg(long, default_value_t = ordersize::constructions::DEFAULT_CUTOFF)]
    pub cutoff: usize,
    /// Graph to blow up (default: the seed graph).
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Write the graph here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Attach a JSON certificate: `<out>.json`, or a comment line on stdout.
    #[arg(long)]
    pub certify: bool,
    #[command(flatten)]
    pub seed: SeedOpt,
}

#[derive(Debug, Args)]
pub struct CheckArrowArgs {
    pub n: usize,
    pub e: usize,
    pub m: usize,
    pub f: u128,
    /// Exhaustive enumeration (n <= 7). Default for n <= 7.
    #[arg(long, conflicts_with = "search")]
    pub exact: bool,
    /// Heuristic counterexample search. Default for n > 7.
    #[arg(long)]
    pub search: bool,
    /// Classes visited (exact) or proposals evaluated (search).
    #[arg(long)]
    pub budget: Option<u64>,
    /// Initial graph for the search.
    #[arg(long)]
    pub start: Option<PathBuf>,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub seed: SeedOpt,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    pub n: usize,
    pub m: usize,
    pub f: u128,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HistogramArgs {
    pub graph: PathBuf,
    pub m: usize,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CertifyZeroArgs {
    pub m: usize,
    pub f: u128,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FilterArgs {
    pub m_lo: usize,
    pub m_hi: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchDioArgs {
    pub m_lo: u64,
    pub m_hi: u64,
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, default_value_t = ordersize::diophantine::DEFAULT_CHUNK)]
    pub chunk: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[arg(long, default_value_t = 20)]
    pub from: usize,
    #[arg(long, default_value_t = 2000)]
    pub to: usize,
    #[arg(long, default_value_t = 1)]
    pub step: usize,
    #[arg(long, default_value_t = ordersize::constructions::DEFAULT_CUTOFF)]
    pub cutoff: usize,
    /// Print `n,edges,density,open_fraction` rows instead of a report.
    #[arg(long)]
    pub csv: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReproArgs {
    /// Check name; omit with `--list`.
    #[arg(required_unless_present = "list")]
    pub name: Option<String>,
    #[arg(long)]
    pub list: bool,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
