//! Command-line front end: table emission, verification campaigns,
//! coefficient dumps, symmetry searches, and a file cache.
//!
//! Exit codes: 0 = all checks pass, 1 = verification counterexample found,
//! 2 = usage error.

mod cache;
mod commands;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "ffcount", version, about = "Solution counts of x + 1/x + y + 1/y = t over finite fields and residue rings", long_about = None)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format for tables (coeffs and symmetries always emit JSON)
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Worker threads; parallelism only partitions independent primes
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,

    /// Directory for cached tables (one JSON file per structure and kind)
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Skip the recomputation spot check when reading a cached table
    #[arg(long, global = true)]
    pub trust_cache: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the table of M(a) = #{x invertible : x + 1/x = a}
    Mtable(StructureArgs),
    /// Print the table of N(t) = #{(x, y) invertible : x + 1/x + y + 1/y = t}
    Ntable(StructureArgs),
    /// Print the coefficients of the mod-p polynomial for N(t) as JSON
    Coeffs {
        /// Odd prime modulus
        #[arg(long)]
        p: u64,
    },
    /// Run the per-prime check battery (bound, parity, 16/t symmetry, congruences)
    Verify {
        /// Check a single odd prime
        #[arg(long)]
        p: Option<u64>,
        /// Check every odd prime up to and including this bound
        #[arg(long)]
        max_p: Option<u64>,
    },
    /// Exhaustively search affine and inversive transformations preserving N
    Symmetries {
        /// Odd prime modulus
        #[arg(long)]
        p: u64,
    },
    /// Print the image set A = {x + 1/x} together with A+A and A*A
    Sets(StructureArgs),
    /// Brute-force N table over the extension field F_{p^k}, plus the 16/t verdict
    Ext {
        /// Odd prime characteristic
        #[arg(long)]
        p: u64,
        /// Extension degree (1..=8)
        #[arg(long)]
        k: usize,
    },
    /// Brute-force N table over the residue ring Z/nZ
    Zn {
        /// Ring modulus (even n is allowed but flagged)
        #[arg(long)]
        n: u64,
    },
}

/// Selects the structure a table is computed over: exactly one of
/// `--p` (prime field), `--n` (residue ring), or `--p --k` (extension field).
#[derive(Args)]
pub struct StructureArgs {
    /// Odd prime modulus p
    #[arg(long)]
    pub p: Option<u64>,

    /// Ring modulus n for Z/nZ (brute-force path)
    #[arg(long)]
    pub n: Option<u64>,

    /// Extension degree k for F_{p^k} (requires --p)
    #[arg(long)]
    pub k: Option<usize>,
}

fn main() {
    let cli = Cli::parse();
    let code = match commands::run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    };
    std::process::exit(code);
}
