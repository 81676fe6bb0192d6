//! Success probabilities of cutoff strategies in the secretary problem when
//! the arrival order is a uniformly random pattern-avoiding permutation, a
//! uniform permutation, or an adversarial "low" permutation.
//!
//! Exact values are fractions over arbitrary-precision integers
//! ([`Rational`]); the closed-form formulas are generic over any
//! [`Scalar`](exact::Scalar) so the same expressions can be evaluated in
//! `f64` or `f32`. Monte Carlo estimates are seeded and reproducible.

pub mod closed_form;
pub mod distribution;
pub mod dyck;
pub mod error;
pub mod exact;
pub mod montecarlo;
pub mod permutation;
pub mod rng;
pub mod sampler;
pub mod secretary;

/// Arbitrary-precision signed integer.
pub type BigInt = num_bigint::BigInt;
/// Reduced fraction of [`BigInt`]s; every exact probability has this type.
pub type Rational = num_rational::BigRational;
/// Fraction of machine integers, enough for closed forms at moderate `n`.
pub type SmallRational = num_rational::Ratio<i64>;

pub use closed_form::{
    closed_form, closed_form_in, gap_to_limit, limit_grid, low_success, lower_bound_312_321,
    lower_bound_312_321_in, LimitSeries,
};
pub use distribution::Distribution;
pub use dyck::{dyck_to_321, enumerate_dyck, sample_dyck, DyckPath, Step};
pub use error::{Error, Result};
pub use exact::{
    catalan, catalan_asymptotic, catalan_ratio, catalan_ratio_in, format_fraction, parse_fraction,
    Scalar,
};
pub use montecarlo::{estimate, estimate_with_workers, sweep, sweep_with_workers, Estimate};
pub use permutation::{enumerate_avoiding, Pattern, Permutation, ENUMERATION_MAX_N};
pub use rng::RandomSource;
pub use sampler::{
    low_permutation, low_permutation_with, sample_avoiding, sample_avoiding_by_position_law,
    sample_low, sample_low_with, sample_uniform, LowCompletion,
};
pub use secretary::{
    d_value, exact_success, exact_success_by_cutoff, exact_success_row, indicator_joint_law,
    max_position_law, max_position_law_enumerated, record_indicators, run_strategy, IndicatorLaw,
    Outcome, Source, SuccessRow,
};

/// `f64` evaluation of [`closed_form_in`].
pub fn closed_form_f64(n: usize, eta: Pattern, m: usize) -> Option<f64> {
    closed_form_in(n, eta, m)
}
