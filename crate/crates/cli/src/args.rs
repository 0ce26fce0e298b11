use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  verification failure (a sampled coefficient exceeded the bound)
  2  usage error (bad flags, beta outside (-pi/2, pi/2), --method theorem2 with n != 3)
  3  I/O error (output file not writable)

Angles are radians unless --degrees is given; output is always in radians.
Set CLBETA_THREADS to cap the number of worker threads.";

/// Coefficient bounds for close-to-convex functions with argument beta.
#[derive(Debug, Parser)]
#[command(name = "clbeta", version, about, after_help = EXIT_CODES)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bound |a_n| for one (beta, n).
    Bound(BoundArgs),
    /// Tabulate the bounds over a beta grid as CSV or JSON.
    Sweep(SweepArgs),
    /// Check the bound against randomly sampled functions of the class.
    Verify(VerifyArgs),
}

/// Which bound `bound` computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Global maximization on the unit circle (any n >= 2).
    Theorem1,
    /// Closed form through the cubic root (n = 3 only).
    Theorem2,
    /// Both, with an agreement check (n = 3 only).
    Both,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Theorem1 => "theorem1",
            Method::Theorem2 => "theorem2",
            Method::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Tilt angle beta.
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    /// Coefficient index n >= 2.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Method::Theorem1)]
    pub method: Method,
    /// Read --beta in degrees.
    #[arg(long)]
    pub degrees: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub beta_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta_max: f64,
    /// Number of grid points, endpoints included (>= 2).
    #[arg(long)]
    pub steps: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file.
    #[arg(long)]
    pub out: PathBuf,
    /// Read the beta range in degrees.
    #[arg(long)]
    pub degrees: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    /// Number of random measure pairs.
    #[arg(long, default_value_t = 500)]
    pub trials: usize,
    /// Atoms per measure.
    #[arg(long, default_value_t = 3)]
    pub atoms: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Read --beta in degrees.
    #[arg(long)]
    pub degrees: bool,
    /// Subtract this from the bound before checking (exercises the failure path).
    #[arg(long, hide = true, default_value_t = 0.0)]
    pub debug_bound_offset: f64,
}
