use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use divlat::inequalities::Family;

#[derive(Debug, Parser)]
#[command(
    name = "divlat",
    version,
    about = "Symmetric divergence measures, their pyramid and inequality checks"
)]
pub struct Cli {
    /// Worker threads (default: available parallelism). DIVLAT_THREADS takes precedence.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All 15 measures and the chain slacks for each (P, Q) pair in a file.
    Compute(ComputeArgs),
    /// Check catalog inequalities on seeded random pairs.
    Verify(VerifyArgs),
    /// Recover the constant of every theorem part.
    Constants(ConstantsArgs),
    /// The 55 pyramid differences for each (P, Q) pair in a file.
    Pyramid(PyramidArgs),
    /// List catalog records.
    Catalog(CatalogArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Input format; the table is written in the same format. Defaults to the file extension.
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated family names (default: all).
    #[arg(long, value_delimiter = ',')]
    pub families: Vec<Family>,
    /// Random pairs per dimension.
    #[arg(long, default_value_t = 10_000)]
    pub pairs: usize,
    #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 5, 10, 50])]
    pub dims: Vec<usize>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
    /// Use P = Q for every pair.
    #[arg(long)]
    pub identical: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    #[arg(long, default_value_t = divlat::constants::GRID_POINTS)]
    pub grid_points: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct PyramidArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
    /// Also write a Graphviz lattice (single-pair inputs only).
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long, value_delimiter = ',')]
    pub families: Vec<Family>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}
