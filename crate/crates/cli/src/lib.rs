//! Command implementations behind the `secretary` binary. Each command
//! returns plain records; [`render`] turns them into CSV, JSON or a text
//! table.

use std::fmt::Write as _;

use anyhow::{bail, ensure, Result};
use serde::Serialize;

use secretary_core::exact::to_decimal;
use secretary_core::{
    catalan, closed_form, enumerate_avoiding, estimate, exact_success, exact_success_by_cutoff, format_fraction,
    gap_to_limit, limit_grid, low_success, lower_bound_312_321, sample_avoiding, Distribution,
    Estimate, LimitSeries, Pattern, RandomSource, Rational, Source, SuccessRow, ENUMERATION_MAX_N,
};

/// Significant digits of every decimal rendering.
pub const DECIMAL_DIGITS: usize = 12;
/// Largest `n` accepted by `count` for the Catalan column.
pub const COUNT_FORMULA_MAX_N: usize = 1000;
/// Largest `n` accepted by `limits`.
pub const LIMITS_MAX_N: usize = 1_000_000;
/// Trials used by `sweep` when a row has no exact value and none were requested.
pub const DEFAULT_TRIALS: u64 = 100_000;
/// Largest low-law `n` that `sweep` cross-checks by enumerating every cutoff.
pub const SWEEP_LOW_ENUMERATION_MAX_N: usize = 300;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Plain,
}

/// Flat form of a [`SuccessRow`]; the column order is the CSV header.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuccessRecord {
    pub dist: String,
    pub n: usize,
    pub m: usize,
    pub exact: Option<String>,
    pub decimal: Option<String>,
    pub estimate: Option<f64>,
    pub stderr: Option<f64>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    pub source: String,
}

impl From<&SuccessRow> for SuccessRecord {
    fn from(row: &SuccessRow) -> Self {
        Self {
            dist: row.dist.clone(),
            n: row.n,
            m: row.m,
            exact: row.exact.as_ref().map(format_fraction),
            decimal: row.exact.as_ref().map(|v| to_decimal(v, DECIMAL_DIGITS)),
            estimate: row.estimate.map(|e| e.p_hat),
            stderr: row.estimate.map(|e| e.stderr),
            trials: row.estimate.map(|e| e.trials),
            seed: row.estimate.map(|e| e.seed),
            source: row.source.as_str().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountRecord {
    pub pattern: String,
    pub n: usize,
    pub enumerated: Option<usize>,
    pub catalan: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitRecord {
    pub dist: String,
    pub n: usize,
    pub m: usize,
    pub exact: String,
    pub decimal: String,
    pub limit: String,
    pub gap: String,
}

/// Enumerated class size (when `n <= 10`) next to `C_n`. A disagreement is
/// an error.
pub fn count(pattern: Pattern, n: usize) -> Result<CountRecord> {
    ensure!(
        (1..=COUNT_FORMULA_MAX_N).contains(&n),
        "n = {n} is outside 1..={COUNT_FORMULA_MAX_N}"
    );
    let formula = catalan(n);
    let enumerated = if n <= ENUMERATION_MAX_N {
        let size = enumerate_avoiding(n, pattern)?.len();
        ensure!(
            formula == size.into(),
            "enumerated {size} avoiders of {pattern} for n = {n}, but C_{n} = {formula}"
        );
        Some(size)
    } else {
        None
    };
    Ok(CountRecord {
        pattern: pattern.to_string(),
        n,
        enumerated,
        catalan: formula.to_string(),
    })
}

fn closed_value(n: usize, dist: &Distribution, m: usize) -> Option<Rational> {
    match dist {
        Distribution::Avoiding(eta) => closed_form(n, *eta, m),
        Distribution::Low(_) => low_success(n, m).ok(),
        Distribution::Uniform => None,
    }
}

/// Prefers the closed form; fails if both values exist and differ.
fn reconcile(
    dist: &Distribution,
    n: usize,
    m: usize,
    closed: Option<Rational>,
    counted: Option<Rational>,
) -> Result<Option<SuccessRow>> {
    if let (Some(c), Some(e)) = (&closed, &counted) {
        ensure!(
            c == e,
            "closed form {} disagrees with enumeration {} for {dist}, n = {n}, m = {m}",
            format_fraction(c),
            format_fraction(e)
        );
    }
    Ok(match (closed, counted) {
        (Some(v), _) => Some(SuccessRow::exact(dist, n, m, v, Source::ClosedForm)),
        (None, Some(v)) => Some(SuccessRow::exact(dist, n, m, v, Source::Enumeration)),
        (None, None) => None,
    })
}

/// Exact rows for every cutoff. Closed forms are preferred; when the
/// support is small enough to enumerate, every closed form is checked
/// against the enumeration. `None` entries have neither.
fn exact_rows(n: usize, dist: &Distribution) -> Result<Vec<Option<SuccessRow>>> {
    let limit = match dist {
        Distribution::Low(_) => SWEEP_LOW_ENUMERATION_MAX_N,
        _ => dist.enumeration_limit(),
    };
    let enumerated = if n <= limit {
        Some(exact_success_by_cutoff(n, dist)?)
    } else {
        None
    };
    (0..n)
        .map(|m| {
            let counted = enumerated.as_ref().map(|values| values[m].clone());
            reconcile(dist, n, m, closed_value(n, dist, m), counted)
        })
        .collect()
}

pub fn exact(dist: &Distribution, n: usize, m: usize) -> Result<SuccessRecord> {
    ensure!(n >= 1, "n must be at least 1");
    ensure!(m < n, "m = {m} must lie in 0..={}", n - 1);
    let closed = closed_value(n, dist, m);
    let counted = if n <= dist.enumeration_limit() {
        Some(exact_success(n, dist, m)?)
    } else {
        None
    };
    match reconcile(dist, n, m, closed, counted)? {
        Some(row) => Ok(SuccessRecord::from(&row)),
        None => bail!(
            "no closed form for {dist} at n = {n}, m = {m}, and n exceeds the enumeration limit {}",
            dist.enumeration_limit()
        ),
    }
}

/// One row per cutoff: exact where available, plus a Monte Carlo estimate
/// when `trials` is given or no exact value exists. For 312/321 a
/// lower-bound row at `m = n - 2` is appended.
pub fn sweep(dist: &Distribution, n: usize, trials: Option<u64>, seed: u64) -> Result<Vec<SuccessRecord>> {
    ensure!(n >= 1, "n must be at least 1");
    let mut rows = Vec::with_capacity(n + 1);
    for (m, exact) in exact_rows(n, dist)?.into_iter().enumerate() {
        let wanted = trials.or(if exact.is_none() { Some(DEFAULT_TRIALS) } else { None });
        let estimated: Option<Estimate> = match wanted {
            Some(t) => Some(estimate(n, dist, m, t, seed)?),
            None => None,
        };
        let row = match (exact, estimated) {
            (Some(row), Some(e)) => row.with_estimate(e),
            (Some(row), None) => row,
            (None, Some(e)) => SuccessRow::estimated(dist, n, m, e),
            (None, None) => unreachable!("an estimate is forced when no exact value exists"),
        };
        rows.push(SuccessRecord::from(&row));
    }
    if let Distribution::Avoiding(Pattern::P312 | Pattern::P321) = dist {
        if n >= 3 {
            let bound = lower_bound_312_321(n)?;
            if let Some(exact) = &rows[n - 2].exact {
                ensure!(
                    *exact == format_fraction(&bound),
                    "success at m = n-2 ({exact}) differs from the lower bound {}",
                    format_fraction(&bound)
                );
            }
            rows.push(SuccessRecord::from(&SuccessRow::exact(
                dist,
                n,
                n - 2,
                bound,
                Source::LowerBound,
            )));
        }
    }
    Ok(rows)
}

pub fn limits(series: LimitSeries, n_max: usize) -> Result<Vec<LimitRecord>> {
    ensure!(
        (3..=LIMITS_MAX_N).contains(&n_max),
        "n-max = {n_max} is outside 3..={LIMITS_MAX_N}"
    );
    limit_grid(n_max)
        .into_iter()
        .map(|n| {
            let value = series.value(n)?;
            Ok(LimitRecord {
                dist: series.to_string(),
                n,
                m: series.cutoff(n),
                exact: format_fraction(&value),
                decimal: to_decimal(&value, DECIMAL_DIGITS),
                limit: format_fraction(&series.limit()),
                gap: to_decimal(&gap_to_limit(series, n)?, DECIMAL_DIGITS),
            })
        })
        .collect()
}

/// `count` avoiders drawn from one seeded source, each re-checked for
/// avoidance before it is returned.
pub fn sample(pattern: Pattern, n: usize, count: usize, seed: u64) -> Result<Vec<String>> {
    ensure!(n >= 1, "n must be at least 1");
    let mut rng = RandomSource::new(seed);
    (0..count)
        .map(|i| {
            let sigma = sample_avoiding(n, pattern, &mut rng);
            ensure!(
                sigma.avoids(pattern),
                "sample {i} ({sigma}) contains {pattern}"
            );
            Ok(sigma.to_string())
        })
        .collect()
}

/// Renders records as CSV (header + rows), JSON (an object for a single
/// record, otherwise an array) or an aligned text table.
pub fn render<T: Serialize>(records: &[T], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            for r in records {
                writer.serialize(r)?;
            }
            Ok(String::from_utf8(writer.into_inner()?)?)
        }
        OutputFormat::Json => {
            let text = match records {
                [single] => serde_json::to_string_pretty(single)?,
                many => serde_json::to_string_pretty(many)?,
            };
            Ok(text + "\n")
        }
        OutputFormat::Plain => plain_table(records),
    }
}

fn plain_table<T: Serialize>(records: &[T]) -> Result<String> {
    let csv_text = render(records, OutputFormat::Csv)?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(csv_text.as_bytes());
    let rows: Vec<Vec<String>> = reader
        .records()
        .map(|r| Ok(r?.iter().map(|c| if c.is_empty() { "-".into() } else { c.into() }).collect()))
        .collect::<Result<_>>()?;
    let columns = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..columns)
        .map(|i| rows.iter().map(|row| row[i].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        writeln!(out, "{}", line.join("  ").trim_end())?;
    }
    Ok(out)
}
