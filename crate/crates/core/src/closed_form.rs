//! Closed-form success probabilities, generic over the scalar they are
//! evaluated in. Instantiate with [`crate::Rational`] for exact values or
//! with `f64` for fast approximations; the formulas only use ratios of
//! consecutive Catalan numbers, so no big integers are needed even at
//! `n = 10^6`.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use crate::error::{check_range, Error, Result};
use crate::exact::{catalan_ratio_in, scalar_from, Scalar};
use crate::permutation::Pattern;
use crate::Rational;

/// Smallest `n` the closed forms are stated for.
pub const CLOSED_FORM_MIN_N: usize = 3;

/// Success probability of the cutoff strategy with cutoff `m` under the
/// uniform law on `eta`-avoiders, where a closed form is known:
///
/// * 231, 132: `C_{n-1}/C_n` for every `m`;
/// * 123: `C_{n-1}/C_n` at `m = 0`, `1 - C_{n-1}/C_n` at `m = 1`;
/// * 213: `C_{n-1}/C_n` at `m ∈ {0, 1}`.
///
/// `None` everywhere else, including `n < 3` and `m >= n`.
pub fn closed_form_in<T: Scalar>(n: usize, eta: Pattern, m: usize) -> Option<T> {
    if n < CLOSED_FORM_MIN_N || m >= n {
        return None;
    }
    let ratio = || catalan_ratio_in::<T>(n);
    match (eta, m) {
        (Pattern::P231 | Pattern::P132, _) => Some(ratio()),
        (Pattern::P123, 0) => Some(ratio()),
        (Pattern::P123, 1) => Some(T::one() - ratio()),
        (Pattern::P213, 0 | 1) => Some(ratio()),
        _ => None,
    }
}

pub fn closed_form(n: usize, eta: Pattern, m: usize) -> Option<Rational> {
    closed_form_in(n, eta, m)
}

/// `1/n`: success of any cutoff strategy under a low law.
pub fn low_success(n: usize, m: usize) -> Result<Rational> {
    check_range("n", n, 1, usize::MAX)?;
    check_range("m", m, 0, n - 1)?;
    Ok(low_success_in(n))
}

pub fn low_success_in<T: Scalar>(n: usize) -> T {
    T::one() / scalar_from::<T>(n)
}

/// `(2 C_{n-1} - C_{n-2}) / C_n`, the success of cutoff `n - 2` under the
/// 312- and 321-avoiding laws.
pub fn lower_bound_312_321(n: usize) -> Result<Rational> {
    check_range("n", n, CLOSED_FORM_MIN_N, usize::MAX)?;
    Ok(lower_bound_312_321_in(n))
}

/// Same as [`lower_bound_312_321`], written as
/// `2 r_n - r_{n-1} r_n` with `r_k = C_{k-1}/C_k`.
pub fn lower_bound_312_321_in<T: Scalar>(n: usize) -> T {
    let r_n = catalan_ratio_in::<T>(n);
    let r_prev = catalan_ratio_in::<T>(n - 1);
    r_n.clone() + r_n.clone() - r_prev * r_n
}

/// The closed-form sequences whose large-`n` behaviour is tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LimitSeries {
    /// 231 or 132, any cutoff (reported at `m = 0`).
    Flat(Pattern),
    /// 213 at its optimal cutoffs `m ∈ {0, 1}` (reported at `m = 0`).
    Av213,
    /// 123 at its optimal cutoff `m = 1`.
    Av123,
    /// 312 or 321 at cutoff `m = n - 2`.
    Bound(Pattern),
}

impl LimitSeries {
    pub fn cutoff(&self, n: usize) -> usize {
        match self {
            LimitSeries::Flat(_) | LimitSeries::Av213 => 0,
            LimitSeries::Av123 => 1,
            LimitSeries::Bound(_) => n - 2,
        }
    }

    pub fn value_in<T: Scalar>(&self, n: usize) -> T {
        match self {
            LimitSeries::Flat(_) | LimitSeries::Av213 => catalan_ratio_in(n),
            LimitSeries::Av123 => T::one() - catalan_ratio_in::<T>(n),
            LimitSeries::Bound(_) => lower_bound_312_321_in(n),
        }
    }

    pub fn value(&self, n: usize) -> Result<Rational> {
        check_range("n", n, CLOSED_FORM_MIN_N, usize::MAX)?;
        Ok(self.value_in(n))
    }

    /// Limit as `n → ∞`: 1/4, 1/4, 3/4 and 7/16.
    pub fn limit(&self) -> Rational {
        let frac = |p: i64, q: i64| Rational::new(p.into(), q.into());
        match self {
            LimitSeries::Flat(_) | LimitSeries::Av213 => frac(1, 4),
            LimitSeries::Av123 => frac(3, 4),
            LimitSeries::Bound(_) => frac(7, 16),
        }
    }
}

impl fmt::Display for LimitSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitSeries::Flat(p) => write!(f, "av{p}"),
            LimitSeries::Av213 => f.write_str("av213"),
            LimitSeries::Av123 => f.write_str("av123"),
            LimitSeries::Bound(p) => write!(f, "bound{p}"),
        }
    }
}

impl FromStr for LimitSeries {
    type Err = Error;

    /// Accepts `av231`, `av132`, `av213`, `av123`, and `bound312`/`bound321`
    /// (or `av312`/`av321`, which select the same bound).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (prefix, digits) = if let Some(d) = s.strip_prefix("bound") {
            ("bound", d)
        } else if let Some(d) = s.strip_prefix("av") {
            ("av", d)
        } else {
            return Err(Error::UnknownDistribution(s.to_string()));
        };
        let pattern: Pattern = digits
            .parse()
            .map_err(|_| Error::UnknownDistribution(s.to_string()))?;
        match (prefix, pattern) {
            (_, Pattern::P312 | Pattern::P321) => Ok(LimitSeries::Bound(pattern)),
            ("av", Pattern::P231 | Pattern::P132) => Ok(LimitSeries::Flat(pattern)),
            ("av", Pattern::P213) => Ok(LimitSeries::Av213),
            ("av", Pattern::P123) => Ok(LimitSeries::Av123),
            _ => Err(Error::UnknownDistribution(s.to_string())),
        }
    }
}

/// Geometric grid `3, 10, 100, ...` up to and including `n_max`.
pub fn limit_grid(n_max: usize) -> Vec<usize> {
    let mut grid = vec![];
    if n_max >= CLOSED_FORM_MIN_N {
        grid.push(CLOSED_FORM_MIN_N);
    }
    let mut n = 10usize;
    while n <= n_max {
        grid.push(n);
        n = match n.checked_mul(10) {
            Some(next) => next,
            None => break,
        };
    }
    if n_max > CLOSED_FORM_MIN_N && grid.last() != Some(&n_max) {
        grid.push(n_max);
    }
    grid
}

/// `|value - limit|` as an exact fraction.
pub fn gap_to_limit(series: LimitSeries, n: usize) -> Result<Rational> {
    Ok((series.value(n)? - series.limit()).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::catalan;
    use num_rational::Ratio;
    use num_traits::ToPrimitive;

    fn frac(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn examples() {
        assert_eq!(closed_form(8, Pattern::P231, 5), Some(frac(3, 10)));
        assert_eq!(closed_form(3, Pattern::P123, 1), Some(frac(3, 5)));
        assert_eq!(closed_form(3, Pattern::P312, 0), None);
        assert_eq!(closed_form(2, Pattern::P231, 0), None);
        assert_eq!(closed_form(5, Pattern::P231, 5), None);
        assert_eq!(closed_form(6, Pattern::P123, 2), None);
        assert_eq!(closed_form(6, Pattern::P213, 2), None);
        assert_eq!(closed_form(6, Pattern::P123, 1), Some(frac(15, 22)));
    }

    #[test]
    fn scalar_instantiations_agree() {
        for n in 3..40 {
            for eta in Pattern::ALL {
                for m in 0..n {
                    let exact = closed_form(n, eta, m);
                    let small: Option<Ratio<i64>> = closed_form_in(n, eta, m);
                    let float: Option<f64> = closed_form_in(n, eta, m);
                    assert_eq!(exact.is_some(), float.is_some());
                    if let (Some(e), Some(s), Some(f)) = (exact, small, float) {
                        assert_eq!(e, Rational::new((*s.numer()).into(), (*s.denom()).into()));
                        assert!((e.to_f64().unwrap() - f).abs() < 1e-15);
                    }
                }
            }
        }
    }

    #[test]
    fn lower_bound_matches_catalan_definition() {
        assert_eq!(lower_bound_312_321(3).unwrap(), frac(3, 5));
        assert_eq!(lower_bound_312_321(10).unwrap(), frac(8294, 16796));
        assert!(lower_bound_312_321(2).is_err());
        for n in 3..=200 {
            let direct = Rational::new(
                catalan(n - 1) * 2 - catalan(n - 2),
                catalan(n),
            );
            assert_eq!(lower_bound_312_321(n).unwrap(), direct, "n={n}");
        }
    }

    #[test]
    fn lower_bound_converges_to_seven_sixteenths() {
        let v: f64 = lower_bound_312_321(10_000).unwrap().to_f64().unwrap();
        assert!((v - 7.0 / 16.0).abs() < 1e-3);
    }

    #[test]
    fn low_success_values() {
        assert_eq!(low_success(4, 0).unwrap(), frac(1, 4));
        assert_eq!(low_success(4, 3).unwrap(), frac(1, 4));
        assert_eq!(low_success(1, 0).unwrap(), frac(1, 1));
        assert!(low_success(4, 4).is_err());
    }

    #[test]
    fn series_parse_and_gaps() {
        assert_eq!("av231".parse::<LimitSeries>().unwrap(), LimitSeries::Flat(Pattern::P231));
        assert_eq!("av321".parse::<LimitSeries>().unwrap(), LimitSeries::Bound(Pattern::P321));
        assert_eq!("bound312".parse::<LimitSeries>().unwrap(), LimitSeries::Bound(Pattern::P312));
        assert!("bound231".parse::<LimitSeries>().is_err());
        assert!("uniform".parse::<LimitSeries>().is_err());

        let n = 1_000_000;
        // (n+1)/(2(2n-1)) - 1/4 = 3/(4(2n-1)).
        let expected = Rational::new(3.into(), (4 * (2 * n - 1)).into());
        assert_eq!(gap_to_limit(LimitSeries::Flat(Pattern::P231), n as usize).unwrap(), expected);
        assert_eq!(gap_to_limit(LimitSeries::Av123, n as usize).unwrap(), expected);
        assert!(gap_to_limit(LimitSeries::Av213, n as usize).unwrap() < frac(1, 1_000_000));
        let bound_gap = gap_to_limit(LimitSeries::Bound(Pattern::P321), 10_000).unwrap();
        assert!(bound_gap < frac(1, 1000));
    }

    #[test]
    fn grid_shape() {
        assert_eq!(limit_grid(1000), vec![3, 10, 100, 1000]);
        assert_eq!(limit_grid(5000), vec![3, 10, 100, 1000, 5000]);
        assert_eq!(limit_grid(3), vec![3]);
        assert!(limit_grid(2).is_empty());
    }
}
