use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use secretary_cli::{count, exact, limits, render, sample, sweep, OutputFormat};
use secretary_core::{Distribution, LimitSeries, Pattern};

/// Cutoff strategies for the secretary problem under pattern-avoiding
/// permutation distributions.
#[derive(Parser)]
#[command(name = "secretary", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Size of Av_n(pattern), by enumeration and by the Catalan formula.
    Count {
        #[arg(long)]
        pattern: Pattern,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Exact success probability of the cutoff strategy.
    Exact {
        /// uniform, low, low-decreasing or avXYZ.
        #[arg(long)]
        dist: Distribution,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Success probability for every cutoff m = 0..n-1.
    Sweep {
        #[arg(long)]
        dist: Distribution,
        #[arg(long)]
        n: usize,
        /// Monte Carlo trials per row; rows without an exact value always get an estimate.
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, env = "SECRETARY_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Optimal success along a grid of n, with the limiting value and gap.
    Limits {
        /// av231, av132, av213, av123, av312 or av321.
        #[arg(long)]
        dist: LimitSeries,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Uniform random avoiders, one per line.
    Sample {
        #[arg(long)]
        pattern: Pattern,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, env = "SECRETARY_SEED", default_value_t = 0)]
        seed: u64,
    },
}

fn run(command: Command) -> Result<String> {
    match command {
        Command::Count { pattern, n, format } => render(&[count(pattern, n)?], format),
        Command::Exact { dist, n, m, format } => render(&[exact(&dist, n, m)?], format),
        Command::Sweep {
            dist,
            n,
            trials,
            seed,
            format,
        } => render(&sweep(&dist, n, trials, seed)?, format),
        Command::Limits { dist, n_max, format } => render(&limits(dist, n_max)?, format),
        Command::Sample {
            pattern,
            n,
            count,
            seed,
        } => Ok(sample(pattern, n, count, seed)?
            .into_iter()
            .map(|line| line + "\n")
            .collect()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
