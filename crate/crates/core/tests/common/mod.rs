#![allow(dead_code)]

use std::collections::HashMap;
use std::hash::Hash;

use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Pearson statistic of `draws` against the uniform law on `classes`.
/// Panics if a draw falls outside `classes`.
pub fn chi_square_uniform<T: Eq + Hash>(classes: &[T], draws: impl IntoIterator<Item = T>) -> (f64, u64) {
    let index: HashMap<&T, usize> = classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut counts = vec![0u64; classes.len()];
    let mut total = 0u64;
    for d in draws {
        let i = *index.get(&d).expect("draw outside the support");
        counts[i] += 1;
        total += 1;
    }
    let expected = total as f64 / classes.len() as f64;
    let stat = counts
        .iter()
        .map(|&c| {
            let diff = c as f64 - expected;
            diff * diff / expected
        })
        .sum();
    (stat, total)
}

/// 0.999 quantile of the chi-square law with `dof` degrees of freedom.
pub fn chi_square_critical(dof: usize) -> f64 {
    ChiSquared::new(dof as f64).unwrap().inverse_cdf(0.999)
}

/// Binomial standard error of a frequency estimate of `p` from `trials`.
pub fn binomial_se(p: f64, trials: u64) -> f64 {
    (p * (1.0 - p) / trials as f64).sqrt()
}
