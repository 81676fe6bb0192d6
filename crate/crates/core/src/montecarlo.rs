//! Monte Carlo estimates of cutoff-strategy success probabilities.
//!
//! Trial `t` for cutoff `m` draws from `RandomSource::for_stream(seed, [m, t])`,
//! so an estimate depends only on its parameters and never on how trials
//! are spread over worker threads.

use rayon::prelude::*;

use crate::distribution::Distribution;
use crate::error::{check_range, Error, Result};
use crate::rng::RandomSource;
use crate::secretary::run_on;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub p_hat: f64,
    /// Normal-approximation standard error `sqrt(p(1-p)/trials)`.
    pub stderr: f64,
    pub trials: u64,
    pub seed: u64,
}

impl Estimate {
    pub fn from_counts(successes: u64, trials: u64, seed: u64) -> Self {
        let p_hat = successes as f64 / trials as f64;
        Self {
            p_hat,
            stderr: (p_hat * (1.0 - p_hat) / trials as f64).sqrt(),
            trials,
            seed,
        }
    }

    /// `|p_hat - value|` in units of the standard error. Zero error with a
    /// matching value counts as zero deviations.
    pub fn deviations_from(&self, value: f64) -> f64 {
        let diff = (self.p_hat - value).abs();
        if diff == 0.0 {
            0.0
        } else {
            diff / self.stderr
        }
    }
}

/// Estimates the success probability of cutoff `m` on the global thread pool.
pub fn estimate(n: usize, dist: &Distribution, m: usize, trials: u64, seed: u64) -> Result<Estimate> {
    check_args(n, m, trials)?;
    Ok(Estimate::from_counts(count_successes(n, dist, m, trials, seed), trials, seed))
}

/// [`estimate`] on a dedicated pool of `workers` threads.
pub fn estimate_with_workers(
    n: usize,
    dist: &Distribution,
    m: usize,
    trials: u64,
    seed: u64,
    workers: usize,
) -> Result<Estimate> {
    check_args(n, m, trials)?;
    let pool = worker_pool(workers)?;
    let successes = pool.install(|| count_successes(n, dist, m, trials, seed));
    Ok(Estimate::from_counts(successes, trials, seed))
}

/// One estimate per cutoff `m = 0..n`, each identical to
/// `estimate(n, dist, m, trials, seed)`.
pub fn sweep(n: usize, dist: &Distribution, trials: u64, seed: u64) -> Result<Vec<Estimate>> {
    (0..n).map(|m| estimate(n, dist, m, trials, seed)).collect()
}

pub fn sweep_with_workers(
    n: usize,
    dist: &Distribution,
    trials: u64,
    seed: u64,
    workers: usize,
) -> Result<Vec<Estimate>> {
    check_range("n", n, 1, usize::MAX)?;
    check_range("trials", trials as usize, 1, usize::MAX)?;
    let pool = worker_pool(workers)?;
    Ok(pool.install(|| {
        (0..n)
            .map(|m| Estimate::from_counts(count_successes(n, dist, m, trials, seed), trials, seed))
            .collect()
    }))
}

fn check_args(n: usize, m: usize, trials: u64) -> Result<()> {
    check_range("n", n, 1, usize::MAX)?;
    check_range("m", m, 0, n - 1)?;
    if trials == 0 {
        return Err(Error::OutOfRange {
            what: "trials",
            value: 0,
            min: 1,
            max: u64::MAX,
        });
    }
    Ok(())
}

fn worker_pool(workers: usize) -> Result<rayon::ThreadPool> {
    check_range("workers", workers, 1, 1024)?;
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("failed to start worker threads"))
}

fn count_successes(n: usize, dist: &Distribution, m: usize, trials: u64, seed: u64) -> u64 {
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = RandomSource::for_stream(seed, &[m as u64, t]);
            let sigma = dist.sample(n, &mut rng);
            u64::from(run_on(sigma.entries(), m).success)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::Pattern;
    use crate::sampler::LowCompletion;

    #[test]
    fn single_item_always_succeeds() {
        for dist in [
            Distribution::Uniform,
            Distribution::Avoiding(Pattern::P321),
            Distribution::Low(LowCompletion::Increasing),
        ] {
            let e = estimate(1, &dist, 0, 1000, 4).unwrap();
            assert_eq!(e.p_hat, 1.0);
            assert_eq!(e.stderr, 0.0);
            assert_eq!(e.deviations_from(1.0), 0.0);
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        let d = Distribution::Uniform;
        assert!(estimate(5, &d, 5, 10, 0).is_err());
        assert!(estimate(5, &d, 0, 0, 0).is_err());
        assert!(estimate_with_workers(5, &d, 0, 10, 0, 0).is_err());
    }

    #[test]
    fn stderr_formula() {
        let e = Estimate::from_counts(25, 100, 0);
        assert_eq!(e.p_hat, 0.25);
        assert!((e.stderr - (0.25f64 * 0.75 / 100.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let d = Distribution::Avoiding(Pattern::P213);
        let one = estimate_with_workers(7, &d, 2, 5000, 99, 1).unwrap();
        let three = estimate_with_workers(7, &d, 2, 5000, 99, 3).unwrap();
        assert_eq!(one, three);
        assert_eq!(one, estimate(7, &d, 2, 5000, 99).unwrap());
    }

    #[test]
    fn sweep_rows_equal_single_estimates() {
        let d = Distribution::Avoiding(Pattern::P123);
        let rows = sweep(5, &d, 2000, 8).unwrap();
        assert_eq!(rows.len(), 5);
        for (m, row) in rows.iter().enumerate() {
            assert_eq!(*row, estimate(5, &d, m, 2000, 8).unwrap());
        }
        assert_eq!(rows, sweep_with_workers(5, &d, 2000, 8, 2).unwrap());
    }
}
