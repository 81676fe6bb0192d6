use std::fmt;
use std::str::FromStr;

use rand::RngCore;

use crate::error::{check_range, Error, Result};
use crate::permutation::{avoiding_class, for_each_permutation, Pattern, Permutation, ENUMERATION_MAX_N};
use crate::sampler::{low_permutation_with, sample_avoiding, sample_low_with, sample_uniform, LowCompletion};

/// Largest `n` whose low-law support is walked exactly. Each of the `n`
/// support points costs `O(n)`, so the walk is quadratic.
pub const LOW_ENUMERATION_MAX_N: usize = 10_000;

/// Law of the arrival order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Distribution {
    /// Uniform on all of `S_n`.
    Uniform,
    /// Uniform on the permutations avoiding the pattern.
    Avoiding(Pattern),
    /// Uniform on the `n` low permutations `σ^{n;j}`.
    Low(LowCompletion),
}

impl Distribution {
    pub fn sample<R: RngCore + ?Sized>(&self, n: usize, rng: &mut R) -> Permutation {
        match *self {
            Distribution::Uniform => sample_uniform(n, rng),
            Distribution::Avoiding(eta) => sample_avoiding(n, eta, rng),
            Distribution::Low(completion) => sample_low_with(n, completion, rng),
        }
    }

    /// Largest `n` accepted by [`Self::for_each_in_support`].
    pub fn enumeration_limit(&self) -> usize {
        match self {
            Distribution::Uniform | Distribution::Avoiding(_) => ENUMERATION_MAX_N,
            Distribution::Low(_) => LOW_ENUMERATION_MAX_N,
        }
    }

    /// Visits every point of the support once. Every distribution here is
    /// uniform on its support, so each visit carries weight `1 / count`;
    /// the count is returned.
    pub fn for_each_in_support(&self, n: usize, mut visit: impl FnMut(&[u32])) -> Result<u64> {
        check_range("n", n, 1, self.enumeration_limit())?;
        let mut count = 0u64;
        match *self {
            Distribution::Uniform => for_each_permutation(n, |sigma| {
                count += 1;
                visit(sigma);
            }),
            Distribution::Avoiding(eta) => {
                for sigma in avoiding_class(n, eta)?.iter() {
                    count += 1;
                    visit(sigma.entries());
                }
            }
            Distribution::Low(completion) => {
                for j in 1..=n {
                    count += 1;
                    visit(low_permutation_with(n, j, completion)?.entries());
                }
            }
        }
        Ok(count)
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distribution::Uniform => f.write_str("uniform"),
            Distribution::Avoiding(eta) => write!(f, "av{eta}"),
            Distribution::Low(LowCompletion::Increasing) => f.write_str("low"),
            Distribution::Low(LowCompletion::Decreasing) => f.write_str("low-decreasing"),
        }
    }
}

impl FromStr for Distribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "uniform" => Ok(Distribution::Uniform),
            "low" => Ok(Distribution::Low(LowCompletion::Increasing)),
            "low-decreasing" => Ok(Distribution::Low(LowCompletion::Decreasing)),
            other => other
                .strip_prefix("av")
                .and_then(|digits| digits.parse::<Pattern>().ok())
                .map(Distribution::Avoiding)
                .ok_or_else(|| Error::UnknownDistribution(s.to_string())),
        }
    }
}
