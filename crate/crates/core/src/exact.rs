//! Exact integers and fractions: Catalan numbers, their ratios, and the
//! `p/q` text form used for every probability in the crate.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{Float, FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Scalar types the closed-form formulas can be evaluated in.
///
/// Exact fractions (`BigRational`, `Ratio<i64>`) give exact answers;
/// `f32`/`f64` give fast approximations of the same expressions.
pub trait Scalar: Num + Clone + PartialOrd + FromPrimitive {}

impl<T: Num + Clone + PartialOrd + FromPrimitive> Scalar for T {}

pub(crate) fn scalar_from<T: Scalar>(value: usize) -> T {
    T::from_u64(value as u64).expect("scalar type cannot represent an index")
}

// C_0..=C_len-1. Entries are appended under the write lock only, so a
// reader sees either the old or the extended table, never a torn entry.
static CATALAN_TABLE: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// The `n`-th Catalan number, `C_n = binom(2n, n) / (n + 1)`, with `C_0 = 1`.
///
/// Values are memoised: a query for `n` fills the shared table for `0..=n`.
pub fn catalan(n: usize) -> BigInt {
    {
        let table = CATALAN_TABLE.read().expect("catalan table poisoned");
        if let Some(value) = table.get(n) {
            return value.clone();
        }
    }
    let mut table = CATALAN_TABLE.write().expect("catalan table poisoned");
    extend_catalan_table(&mut table, n);
    table[n].clone()
}

/// `[C_0, C_1, ..., C_n]`.
pub fn catalan_sequence(n: usize) -> Vec<BigInt> {
    {
        let table = CATALAN_TABLE.read().expect("catalan table poisoned");
        if table.len() > n {
            return table[..=n].to_vec();
        }
    }
    let mut table = CATALAN_TABLE.write().expect("catalan table poisoned");
    extend_catalan_table(&mut table, n);
    table[..=n].to_vec()
}

fn extend_catalan_table(table: &mut Vec<BigInt>, n: usize) {
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        // C_k = C_{k-1} * 2(2k-1) / (k+1); the division is exact.
        let k = table.len();
        let next = &table[k - 1] * BigInt::from(2 * (2 * k - 1)) / BigInt::from(k + 1);
        table.push(next);
    }
}

/// `binom(n, k)` by the running product `prod (n-k+i)/i`, each step exact.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// `C_{n-1} / C_n = (n + 1) / (2(2n - 1))`, reduced.
pub fn catalan_ratio(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            min: 1,
            max: u64::MAX,
        });
    }
    Ok(catalan_ratio_in(n))
}

/// `C_{n-1} / C_n` evaluated in any [`Scalar`]. Requires `n >= 1`.
pub fn catalan_ratio_in<T: Scalar>(n: usize) -> T {
    debug_assert!(n >= 1);
    scalar_from::<T>(n + 1) / scalar_from::<T>(2 * (2 * n - 1))
}

/// Leading-order approximation `4^n / (sqrt(pi) n^{3/2})` of `C_n`,
/// evaluated in log space so large `n` overflows only at the final `exp`.
pub fn catalan_asymptotic(n: usize) -> f64 {
    catalan_asymptotic_in::<f64>(n)
}

pub fn catalan_asymptotic_in<F: Float + FromPrimitive>(n: usize) -> F {
    ln_catalan_asymptotic_in::<F>(n).exp()
}

/// `n ln 4 - ln(pi)/2 - (3/2) ln n`, finite for every `n >= 1`.
pub fn ln_catalan_asymptotic_in<F: Float + FromPrimitive>(n: usize) -> F {
    let n = F::from_usize(n).expect("n not representable");
    let four = F::from_f64(4.0).unwrap();
    let pi = F::from_f64(std::f64::consts::PI).unwrap();
    let half = F::from_f64(0.5).unwrap();
    let three_halves = F::from_f64(1.5).unwrap();
    n * four.ln() - half * pi.ln() - three_halves * n.ln()
}

/// Natural log of a positive big integer, accurate to double precision
/// even when the integer itself does not fit in an `f64`.
pub fn ln_bigint(value: &BigInt) -> f64 {
    assert!(value.is_positive(), "ln of a non-positive integer");
    let bits = value.bits();
    if bits <= 1000 {
        return value.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top: BigInt = value >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// `p/q` with `q > 0`; integers keep an explicit `/1`.
pub fn format_fraction(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Parses `p/q` or a bare integer `p`, reducing the result.
pub fn parse_fraction(text: &str) -> Result<Rational> {
    let bad = || Error::ParseFraction(text.to_string());
    let trimmed = text.trim();
    let (numer, denom) = match trimmed.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Decimal rendering with `digits` significant digits. Display only; the
/// fraction stays the value of record.
pub fn to_decimal(value: &Rational, digits: usize) -> String {
    format_significant(value.to_f64().unwrap_or(f64::NAN), digits)
}

pub fn format_significant(value: f64, digits: usize) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let magnitude = value.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    #[test]
    fn catalan_small_values() {
        assert_eq!(catalan(0), BigInt::from(1));
        assert_eq!(catalan(3), BigInt::from(5));
        assert_eq!(catalan(10), BigInt::from(16796));
        let seq: Vec<u64> = catalan_sequence(7).iter().map(|c| c.to_u64().unwrap()).collect();
        assert_eq!(seq, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn catalan_by_convolution_matches_table() {
        // Independent route: C_n = sum_{j=1..n} C_{j-1} C_{n-j} from C_0 = 1.
        let mut conv = vec![BigInt::one()];
        for n in 1..=200usize {
            let next: BigInt = (1..=n).map(|j| &conv[j - 1] * &conv[n - j]).sum();
            conv.push(next);
        }
        assert_eq!(catalan_sequence(200), conv);
    }

    #[test]
    fn catalan_times_n_plus_one_is_central_binomial() {
        for n in 1..=200 {
            assert_eq!(catalan(n) * BigInt::from(n + 1), binomial(2 * n, n), "n = {n}");
        }
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(catalan_ratio(1).unwrap(), Rational::one());
        assert_eq!(catalan_ratio(3).unwrap(), Rational::new(2.into(), 5.into()));
        assert_eq!(catalan_ratio(8).unwrap(), Rational::new(3.into(), 10.into()));
        assert!(catalan_ratio(0).is_err());
    }

    #[test]
    fn ratio_matches_catalan_quotient_and_decreases() {
        let quarter = Rational::new(1.into(), 4.into());
        let mut prev: Option<Rational> = None;
        for n in 1..=200 {
            let r = catalan_ratio(n).unwrap();
            assert_eq!(r, Rational::new(catalan(n - 1), catalan(n)));
            assert!(r > quarter);
            if let Some(p) = prev {
                assert!(r < p);
            }
            prev = Some(r);
        }
    }

    #[test]
    fn ratio_is_generic_over_scalars() {
        assert_eq!(catalan_ratio_in::<Ratio<i64>>(8), Ratio::new(3, 10));
        assert!((catalan_ratio_in::<f64>(8) - 0.3).abs() < 1e-15);
        assert!((catalan_ratio_in::<f32>(8) - 0.3).abs() < 1e-6);
    }

    #[test]
    fn asymptotic_examples() {
        assert!((catalan_asymptotic(1) - 4.0 / std::f64::consts::PI.sqrt()).abs() < 1e-12);
        let expected = 4f64.powi(10) / (std::f64::consts::PI.sqrt() * 10f64.powf(1.5));
        assert!((catalan_asymptotic(10) - expected).abs() < 1e-9 * expected);
        assert!((catalan_asymptotic(10) - 18708.0).abs() < 1.0);
        assert!((catalan_asymptotic_in::<f32>(10) - 18708.0).abs() < 2.0);
    }

    #[test]
    fn asymptotic_ratio_tends_to_one() {
        let n = 1000;
        assert!(catalan_asymptotic(n).is_infinite());
        let log_ratio = ln_bigint(&catalan(n)) - ln_catalan_asymptotic_in::<f64>(n);
        let ratio = log_ratio.exp();
        assert!((0.99..=1.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn fractions_print_and_parse() {
        let r = Rational::new(BigInt::from(-6), BigInt::from(-8));
        assert_eq!(format_fraction(&r), "3/4");
        assert_eq!(format_fraction(&Rational::one()), "1/1");
        assert_eq!(parse_fraction(" 10/4 ").unwrap(), Rational::new(5.into(), 2.into()));
        assert_eq!(parse_fraction("7").unwrap(), Rational::from_integer(7.into()));
        assert!(parse_fraction("1/0").is_err());
        assert!(parse_fraction("a/2").is_err());
        assert!(parse_fraction("").is_err());
    }

    #[test]
    fn decimal_rendering() {
        let r = Rational::new(3.into(), 10.into());
        assert_eq!(to_decimal(&r, 12), "0.300000000000");
        assert_eq!(to_decimal(&Rational::one(), 12), "1.00000000000");
        assert_eq!(to_decimal(&Rational::zero(), 12), "0");
    }
}
