//! The `groth` command line tool: argument definitions and the subcommands behind them.

pub mod commands;
mod error;
pub mod svg;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use groth_core::{parse_rational, ExactParams, Rational};

pub use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "groth", version, about = "Grothendieck random partitions: weights, kernels, determinantal tests, sampling and limit shapes")]
pub struct Cli {
    /// Worker threads for parallel stages. GROTH_THREADS takes precedence when set.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Probability of one partition, exact and decimal.
    Weight(WeightArgs),
    /// Gram determinant against the product formula, and the truncated total mass.
    NormalizeCheck(NormalizeArgs),
    /// Correlation function ρ of a set of points.
    Correlations(CorrelationArgs),
    /// Table of correlation kernel entries.
    Kernel(KernelArgs),
    /// Fourth order determinantal test, on correlations or on a supplied matrix.
    Nanson(NansonArgs),
    /// Exact samples through RSK.
    Sample(SampleArgs),
    /// Cross-section, rotated shape and frozen boundary of the limit shape.
    LimitShape(LimitShapeArgs),
    /// Frozen boundary curve as CSV.
    FrozenBoundary(BoundaryArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Model parameters as exact rationals: a single value applies to every index.
#[derive(Args, Debug, Clone)]
pub struct ModelArgs {
    /// Number of rows.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// x_1..x_N, or one value for all.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
    pub x: Vec<String>,
    /// y_1..y_N, or one value for all.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
    pub y: Vec<String>,
    /// β_1..β_{N−1}, or one value for all.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
    pub beta: Vec<String>,
}

pub fn parse_rational_flag(flag: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).ok_or_else(|| CliError::Usage(format!("--{flag}: cannot read {s:?} as a rational")))
}

fn expand(flag: &str, vals: &[String], len: usize) -> Result<Vec<Rational>, CliError> {
    let parsed = vals.iter().map(|s| parse_rational_flag(flag, s)).collect::<Result<Vec<_>, _>>()?;
    match parsed.len() {
        1 => Ok(vec![parsed[0].clone(); len]),
        k if k == len => Ok(parsed),
        k => Err(CliError::Usage(format!("--{flag}: expected 1 or {len} values, got {k}"))),
    }
}

impl ModelArgs {
    pub fn exact(&self) -> Result<ExactParams, CliError> {
        if self.n == 0 {
            return Err(CliError::Usage("--n must be at least 1".into()));
        }
        let xs = expand("x", &self.x, self.n)?;
        let ys = expand("y", &self.y, self.n)?;
        let betas = if self.n == 1 { Vec::new() } else { expand("beta", &self.beta, self.n - 1)? };
        if self.n == 1 {
            self.beta.iter().try_for_each(|s| parse_rational_flag("beta", s).map(drop))?;
        }
        Ok(ExactParams::new(xs, ys, betas)?)
    }
}

/// Homogeneous `(x, y, β)` for the asymptotic commands.
#[derive(Args, Debug, Clone)]
pub struct TripleArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, allow_hyphen_values = true)]
    pub y: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
    /// Run the pipeline for 0 < β < min(1/x, y); outputs are tagged CONJECTURAL.
    #[arg(long)]
    pub allow_positive_beta: bool,
}

#[derive(Args, Debug)]
pub struct WeightArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Parts of λ, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub lambda: Vec<u64>,
    /// Schur measure with the same x and y, ignoring β.
    #[arg(long)]
    pub schur: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct NormalizeArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Stop doubling the cap on λ_1 once the added mass is below this.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, default_value_t = 4)]
    pub start: u64,
    #[arg(long, default_value_t = 256)]
    pub max_part: u64,
}

#[derive(Args, Debug)]
pub struct CorrelationArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Distinct points of the diagonal process, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub points: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KernelMethod {
    Em,
    Contour,
}

#[derive(Args, Debug)]
pub struct KernelArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Entries K(a, t; b, s) for 0 ≤ a, b ≤ max-point.
    #[arg(long, default_value_t = 5)]
    pub max_point: u64,
    /// Level t, default N.
    #[arg(long)]
    pub t: Option<usize>,
    /// Level s, default N.
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long, value_enum, default_value_t = KernelMethod::Em)]
    pub method: KernelMethod,
    /// Quadrature nodes per contour.
    #[arg(long, default_value_t = 256)]
    pub nodes: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct NansonArgs {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub x: Vec<String>,
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub y: Vec<String>,
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub beta: Vec<String>,
    /// Four distinct points.
    #[arg(long, value_delimiter = ',', default_value = "0,1,2,3")]
    pub points: Vec<u64>,
    /// Square matrix of rationals, one row per line; its principal minors replace the correlations.
    #[arg(long, conflicts_with_all = ["x", "y", "beta"])]
    pub matrix: Option<PathBuf>,
    /// Order of the test on a matrix, default its size.
    #[arg(long, requires = "matrix")]
    pub order: Option<usize>,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Samples on streams 0..count; more than one is written as newline-delimited JSON.
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    /// Emit the whole Schur process μ¹..μ^N, not only the diagonal.
    #[arg(long)]
    pub process: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output file, default stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Profile of the first sample as SVG.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Limit shape CSV from `limit-shape` to overlay on the SVG.
    #[arg(long, requires = "svg")]
    pub shape_csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct LimitShapeArgs {
    #[command(flatten)]
    pub triple: TripleArgs,
    /// τ grid 0, 1/k, …, 1.
    #[arg(long, default_value_t = 200)]
    pub tau_steps: usize,
    /// ξ spacing of the height grid.
    #[arg(long, default_value_t = 0.01)]
    pub xi_step: f64,
    #[arg(long, default_value = "limit-shape-out")]
    pub out_dir: PathBuf,
    /// Also write the height grid.
    #[arg(long)]
    pub height: bool,
    /// Overlay an exact sample with this many rows on the shape SVG.
    #[arg(long)]
    pub sample_n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct BoundaryArgs {
    #[command(flatten)]
    pub triple: TripleArgs,
    /// Base size of the parameter grid.
    #[arg(long, default_value_t = 4000)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

/// Thread count from GROTH_THREADS, then the flag.
pub fn thread_count(flag: Option<usize>) -> Result<Option<usize>, CliError> {
    match std::env::var("GROTH_THREADS") {
        Ok(v) if !v.trim().is_empty() => {
            v.trim().parse::<usize>().map(Some).map_err(|_| CliError::Usage(format!("GROTH_THREADS: cannot read {v:?} as a count")))
        }
        _ => Ok(flag),
    }
}

pub fn run(cli: &Cli, out: &mut dyn std::io::Write) -> Result<(), CliError> {
    use commands::*;
    match &cli.command {
        Command::Weight(a) => weight(a, out),
        Command::NormalizeCheck(a) => normalize_check(a, out),
        Command::Correlations(a) => correlations(a, out),
        Command::Kernel(a) => kernel(a, out),
        Command::Nanson(a) => nanson(a, out),
        Command::Sample(a) => sample(a, out),
        Command::LimitShape(a) => limit_shape(a, out),
        Command::FrozenBoundary(a) => frozen_boundary(a, out),
    }
}
