//! Cutoff strategies and their exact success probabilities.
//!
//! The exact values here come from walking the full support of a
//! distribution and scoring every arrival order with [`run_strategy`]; the
//! closed forms in [`crate::closed_form`] are checked against them.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::closed_form::closed_form;
use crate::distribution::Distribution;
use crate::error::{check_range, Result};
use crate::exact::catalan_sequence;
use crate::montecarlo::Estimate;
use crate::permutation::{Pattern, Permutation, ENUMERATION_MAX_N};
use crate::Rational;

/// Largest `n` for the closed-form position law of the maximum under the
/// 231- and 132-avoiding laws.
pub const POSITION_LAW_MAX_N: usize = 1000;

/// Result of one run of a cutoff strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Outcome {
    /// 1-based position of the selected item, `None` if nothing qualified.
    pub selected_position: Option<usize>,
    /// The selected item is the best one (rank `n`).
    pub success: bool,
}

/// Rejects the first `m` items, then takes the first item ranked above all
/// of them. With `m = 0` the first item is taken.
pub fn run_strategy(sigma: &Permutation, m: usize) -> Result<Outcome> {
    check_range("m", m, 0, sigma.len() - 1)?;
    Ok(run_on(sigma.entries(), m))
}

pub(crate) fn run_on(entries: &[u32], m: usize) -> Outcome {
    let n = entries.len() as u32;
    // 0 sits below every rank, so an empty prefix lets position 1 through.
    let threshold = entries[..m].iter().copied().max().unwrap_or(0);
    let selected = entries[m..]
        .iter()
        .position(|&v| v > threshold)
        .map(|offset| m + offset);
    Outcome {
        selected_position: selected.map(|i| i + 1),
        success: selected.is_some_and(|i| entries[i] == n),
    }
}

/// Exact success probability of cutoff `m` under `dist`, averaged over its
/// support.
pub fn exact_success(n: usize, dist: &Distribution, m: usize) -> Result<Rational> {
    check_range("m", m, 0, n.saturating_sub(1))?;
    let mut wins = 0u64;
    let total = dist.for_each_in_support(n, |sigma| {
        if run_on(sigma, m).success {
            wins += 1;
        }
    })?;
    Ok(Rational::new(wins.into(), total.into()))
}

/// [`exact_success`] for every cutoff `0..n`, in one pass over the support.
pub fn exact_success_by_cutoff(n: usize, dist: &Distribution) -> Result<Vec<Rational>> {
    let mut wins = vec![0u64; n];
    let total = dist.for_each_in_support(n, |sigma| {
        for (m, w) in wins.iter_mut().enumerate() {
            if run_on(sigma, m).success {
                *w += 1;
            }
        }
    })?;
    Ok(wins
        .into_iter()
        .map(|w| Rational::new(w.into(), total.into()))
        .collect())
}

/// `D_{n,m} = Σ_{j=m+1..n} Σ_{i=1..m} C_{n-j} C_{i-1} C_{j-1-i} / C_n`.
pub fn d_value(n: usize, m: usize) -> Result<Rational> {
    check_range("n", n, 2, usize::MAX)?;
    check_range("m", m, 1, n - 1)?;
    let c = catalan_sequence(n);
    let mut sum = BigInt::zero();
    for j in m + 1..=n {
        let inner: BigInt = (1..=m).map(|i| &c[i - 1] * &c[j - 1 - i]).sum();
        sum += &c[n - j] * inner;
    }
    Ok(Rational::new(sum, c[n].clone()))
}

/// `P(σ_j = n)` for `j = 1..=n`. 231 and 132 use `C_{j-1} C_{n-j} / C_n`
/// (any `n ≤ 1000`); the other patterns are enumerated (`n ≤ 10`).
pub fn max_position_law(n: usize, eta: Pattern) -> Result<Vec<Rational>> {
    match eta {
        Pattern::P231 | Pattern::P132 => {
            check_range("n", n, 1, POSITION_LAW_MAX_N)?;
            let c = catalan_sequence(n);
            Ok((1..=n)
                .map(|j| Rational::new(&c[j - 1] * &c[n - j], c[n].clone()))
                .collect())
        }
        _ => max_position_law_enumerated(n, &Distribution::Avoiding(eta)),
    }
}

/// `P(σ_j = n)` by walking the support of `dist`.
pub fn max_position_law_enumerated(n: usize, dist: &Distribution) -> Result<Vec<Rational>> {
    let mut counts = vec![0u64; n];
    let total = dist.for_each_in_support(n, |sigma| {
        let j = sigma.iter().position(|&v| v as usize == n).expect("n present");
        counts[j] += 1;
    })?;
    Ok(counts
        .into_iter()
        .map(|c| Rational::new(c.into(), total.into()))
        .collect())
}

/// Bit `k` is set iff `σ_k` exceeds every earlier entry.
pub fn record_indicators(sigma: &Permutation) -> Vec<bool> {
    records_of(sigma.entries())
}

fn records_of(entries: &[u32]) -> Vec<bool> {
    let mut best = 0u32;
    entries
        .iter()
        .map(|&v| {
            let record = v > best;
            best = best.max(v);
            record
        })
        .collect()
}

/// Exact joint law of the record indicators `(I_1, ..., I_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct IndicatorLaw {
    pub n: usize,
    /// Probability of every indicator vector with positive mass.
    pub joint: BTreeMap<Vec<bool>, Rational>,
    /// `P(I_k = 1)`, index `k - 1`.
    pub marginals: Vec<Rational>,
}

impl IndicatorLaw {
    /// Probability of the event described by `event` on indicator vectors.
    pub fn probability(&self, event: impl Fn(&[bool]) -> bool) -> Rational {
        self.joint
            .iter()
            .filter(|(bits, _)| event(bits))
            .map(|(_, p)| p.clone())
            .sum()
    }

    /// `P(I_k = 1 for every k in positions)` with 1-based positions.
    pub fn all_records(&self, positions: &[usize]) -> Rational {
        self.probability(|bits| positions.iter().all(|&k| bits[k - 1]))
    }

    /// Mutual independence: for every vector in `{0,1}^n`, the joint mass
    /// equals the product of the marginals. Exact comparison.
    pub fn is_independent(&self) -> bool {
        let zero = Rational::zero();
        (0u32..1 << self.n).all(|mask| {
            let bits: Vec<bool> = (0..self.n).map(|k| mask >> k & 1 == 1).collect();
            let product: Rational = bits
                .iter()
                .zip(&self.marginals)
                .map(|(&b, p)| if b { p.clone() } else { Rational::one() - p })
                .product();
            product == *self.joint.get(&bits).unwrap_or(&zero)
        })
    }
}

pub fn indicator_joint_law(n: usize, dist: &Distribution) -> Result<IndicatorLaw> {
    check_range("n", n, 1, ENUMERATION_MAX_N)?;
    let mut counts: HashMap<Vec<bool>, u64> = HashMap::new();
    let total = dist.for_each_in_support(n, |sigma| {
        *counts.entry(records_of(sigma)).or_default() += 1;
    })?;
    let total = BigInt::from(total);
    let joint: BTreeMap<Vec<bool>, Rational> = counts
        .into_iter()
        .map(|(bits, c)| (bits, Rational::new(c.into(), total.clone())))
        .collect();
    let marginals = (0..n)
        .map(|k| {
            joint
                .iter()
                .filter(|(bits, _)| bits[k])
                .map(|(_, p)| p.clone())
                .sum()
        })
        .collect();
    Ok(IndicatorLaw { n, joint, marginals })
}

/// Where a reported probability came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    ClosedForm,
    Enumeration,
    MonteCarlo,
    /// The `(2 C_{n-1} - C_{n-2}) / C_n` reference value at `m = n - 2`.
    LowerBound,
}

impl Source {
    pub fn as_str(&self) -> &'static str {
        match self {
            Source::ClosedForm => "closed-form",
            Source::Enumeration => "enumeration",
            Source::MonteCarlo => "monte-carlo",
            Source::LowerBound => "lower-bound",
        }
    }
}

/// One row of a success-probability table: an exact value, an estimate,
/// or both.
#[derive(Clone, Debug, PartialEq)]
pub struct SuccessRow {
    pub dist: String,
    pub n: usize,
    pub m: usize,
    pub exact: Option<Rational>,
    pub estimate: Option<Estimate>,
    pub source: Source,
}

impl SuccessRow {
    pub fn exact(dist: impl ToString, n: usize, m: usize, value: Rational, source: Source) -> Self {
        Self {
            dist: dist.to_string(),
            n,
            m,
            exact: Some(value),
            estimate: None,
            source,
        }
    }

    pub fn estimated(dist: impl ToString, n: usize, m: usize, estimate: Estimate) -> Self {
        Self {
            dist: dist.to_string(),
            n,
            m,
            exact: None,
            estimate: Some(estimate),
            source: Source::MonteCarlo,
        }
    }

    pub fn with_estimate(mut self, estimate: Estimate) -> Self {
        self.estimate = Some(estimate);
        self
    }

    /// At least one value present, each within `[0, 1]`.
    pub fn is_valid(&self) -> bool {
        let exact_ok = self
            .exact
            .as_ref()
            .is_none_or(|p| *p >= Rational::zero() && *p <= Rational::one());
        let estimate_ok = self
            .estimate
            .as_ref()
            .is_none_or(|e| (0.0..=1.0).contains(&e.p_hat));
        (self.exact.is_some() || self.estimate.is_some()) && exact_ok && estimate_ok
    }
}

/// Exact success probability with its provenance: the closed form when one
/// exists, otherwise enumeration of the support.
pub fn exact_success_row(n: usize, dist: &Distribution, m: usize) -> Result<SuccessRow> {
    check_range("m", m, 0, n.saturating_sub(1))?;
    let closed = match dist {
        Distribution::Avoiding(eta) => closed_form(n, *eta, m),
        Distribution::Low(_) => Some(crate::closed_form::low_success(n, m)?),
        Distribution::Uniform => None,
    };
    Ok(match closed {
        Some(value) => SuccessRow::exact(dist, n, m, value, Source::ClosedForm),
        None => SuccessRow::exact(dist, n, m, exact_success(n, dist, m)?, Source::Enumeration),
    })
}
