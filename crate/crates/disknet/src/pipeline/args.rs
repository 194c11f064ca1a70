//! Command-line surface of the batch pipeline.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "disknet",
    version,
    about = "Embed weighted networks in the hyperbolic disk and measure hierarchy, diversity, and co-movement"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Generate a reference graph and write its edge CSV
    Synth(SynthArgs),
    /// Build yearly coauthor and institution graphs plus a pooled code graph
    BuildNet(BuildNetArgs),
    /// Train a disk embedding from an edge CSV and write the checkpoint
    Embed(EmbedArgs),
    /// Compute entity profiles and distance matrices for one year
    Metrics(MetricsArgs),
    /// Fit per-pair slopes, correlate them, bin them, and tally lag regressions
    Analyze(AnalyzeArgs),
    /// Print entropy and mutual-information quantities for a joint table
    InfoDemo(InfoDemoArgs),
    /// Render SVG plots from prior pipeline outputs
    Report(ReportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SynthKind {
    Tree,
    RingLattice,
    RewiredLattice,
}

impl SynthKind {
    pub fn label(self) -> &'static str {
        match self {
            SynthKind::Tree => "tree",
            SynthKind::RingLattice => "ring-lattice",
            SynthKind::RewiredLattice => "rewired-lattice",
        }
    }
}

#[derive(Args)]
pub struct SynthArgs {
    /// Reference family to generate
    #[arg(long, value_enum)]
    pub kind: SynthKind,
    /// Children per node (tree)
    #[arg(long)]
    pub branching: Option<u32>,
    /// Levels counting the root (tree)
    #[arg(long)]
    pub levels: Option<u32>,
    /// Node count (lattices)
    #[arg(long)]
    pub nodes: Option<u32>,
    /// Even neighbor count per node (lattices)
    #[arg(long)]
    pub degree: Option<u32>,
    /// Rewiring attempts (rewired-lattice)
    #[arg(long, default_value_t = 200)]
    pub attempts: usize,
    /// Random seed (required by rewired-lattice)
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory (falls back to DISKNET_OUT)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct BuildNetArgs {
    /// JSON Lines records file
    #[arg(long)]
    pub records: PathBuf,
    /// Inclusive year range like 2002..2011 (default: span of the records)
    #[arg(long)]
    pub years: Option<String>,
    /// How many institutions to keep, ranked by total weight
    #[arg(long, default_value_t = 300)]
    pub top_k: usize,
    /// Output directory (falls back to DISKNET_OUT)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct EmbedArgs {
    /// Edge CSV to embed
    #[arg(long)]
    pub edges: PathBuf,
    /// Run seed; all training randomness derives from it
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.5)]
    pub lr: f64,
    #[arg(long, default_value_t = 50)]
    pub negatives: usize,
    #[arg(long, default_value_t = 30)]
    pub batch: usize,
    #[arg(long, default_value_t = 300)]
    pub epochs: usize,
    /// Initial reduced-rate epochs excluded from checkpointing
    #[arg(long, default_value_t = 20)]
    pub burnin: usize,
    /// Learning-rate factor during burn-in
    #[arg(long, default_value_t = 0.1)]
    pub burnin_factor: f64,
    #[arg(long, default_value_t = 5)]
    pub eval_every: usize,
    /// Keep positions inside radius 1 - epsilon
    #[arg(long, default_value_t = 1e-5)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0.05)]
    pub validation_fraction: f64,
    /// Sample positive pairs in one direction only
    #[arg(long)]
    pub no_symmetrize: bool,
    /// Output directory (falls back to DISKNET_OUT)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct MetricsArgs {
    /// JSON Lines records file
    #[arg(long)]
    pub records: PathBuf,
    /// Year to profile
    #[arg(long)]
    pub year: i32,
    /// Checkpoint of the institution embedding
    #[arg(long)]
    pub social_model: PathBuf,
    /// Checkpoint of the code embedding
    #[arg(long)]
    pub semantic_model: PathBuf,
    /// Fixed KDE bandwidth (default: Scott's rule)
    #[arg(long)]
    pub bandwidth: Option<f64>,
    /// Angular-entropy histogram bins
    #[arg(long, default_value_t = 36)]
    pub bins: usize,
    /// Output directory (falls back to DISKNET_OUT)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct AnalyzeArgs {
    /// Directory holding profiles_<year>.csv and the distance matrices
    #[arg(long)]
    pub profiles_dir: PathBuf,
    /// Bins for the slope scatter
    #[arg(long, default_value_t = 10)]
    pub bins: usize,
    /// Significance level for the lag regressions
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    /// Drop the autoregressive term from the lag regressions
    #[arg(long)]
    pub no_ar: bool,
    /// Output directory (falls back to DISKNET_OUT)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaseArg {
    Bits,
    Nats,
}

#[derive(Args)]
pub struct InfoDemoArgs {
    /// Headerless CSV of joint probabilities (rows = X, columns = Y)
    #[arg(long)]
    pub joint: PathBuf,
    #[arg(long, value_enum, default_value_t = BaseArg::Bits)]
    pub base: BaseArg,
}

#[derive(Args)]
pub struct ReportArgs {
    /// Embedding checkpoint to draw as a disk plot
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// binned.csv from analyze, drawn as a scatter
    #[arg(long)]
    pub binned: Option<PathBuf>,
    /// slopes.csv from analyze, drawn as a scatter
    #[arg(long)]
    pub slopes: Option<PathBuf>,
    /// Output directory (falls back to DISKNET_OUT)
    #[arg(long)]
    pub out: Option<PathBuf>,
}
