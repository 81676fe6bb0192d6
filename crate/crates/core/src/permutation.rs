//! Permutations in one-line notation, length-3 patterns, containment tests
//! and the exhaustive enumeration of avoidance classes.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{check_range, Error, Result};

/// Largest `n` for which avoidance classes are enumerated by filtering `S_n`.
pub const ENUMERATION_MAX_N: usize = 10;

/// A permutation of `1..=n` in one-line notation. Entry `i` (1-based) is the
/// rank of the `i`-th arriving item; rank `n` is the best.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("entry {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("entry {v} repeated")));
            }
        }
        Ok(Self(entries))
    }

    /// Caller guarantees `entries` is a permutation of `1..=len`.
    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(Self::new(entries.clone()).is_ok());
        Self(entries)
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    /// 1-based position holding `value`.
    pub fn position_of(&self, value: u32) -> Option<usize> {
        self.0.iter().position(|&v| v == value).map(|i| i + 1)
    }

    /// Entry `i` becomes `σ_{n+1-i}`.
    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// Entry `i` becomes `n + 1 - σ_i`.
    pub fn complement(&self) -> Self {
        let top = self.0.len() as u32 + 1;
        Self(self.0.iter().map(|&v| top - v).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Self(inv)
    }

    pub fn contains(&self, pattern: Pattern) -> bool {
        contains_fast(&self.0, pattern)
    }

    pub fn avoids(&self, pattern: Pattern) -> bool {
        !self.contains(pattern)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPermutation(format!("cannot parse `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

/// One of the six permutations of `{1, 2, 3}`, naming an avoidance class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    P123,
    P132,
    P213,
    P231,
    P312,
    P321,
}

impl Pattern {
    pub const ALL: [Pattern; 6] = [
        Pattern::P123,
        Pattern::P132,
        Pattern::P213,
        Pattern::P231,
        Pattern::P312,
        Pattern::P321,
    ];

    pub fn entries(self) -> [u32; 3] {
        match self {
            Pattern::P123 => [1, 2, 3],
            Pattern::P132 => [1, 3, 2],
            Pattern::P213 => [2, 1, 3],
            Pattern::P231 => [2, 3, 1],
            Pattern::P312 => [3, 1, 2],
            Pattern::P321 => [3, 2, 1],
        }
    }

    pub fn from_entries(entries: [u32; 3]) -> Option<Self> {
        Self::ALL.into_iter().find(|p| p.entries() == entries)
    }

    pub fn as_permutation(self) -> Permutation {
        Permutation(self.entries().to_vec())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.entries();
        write!(f, "{a}{b}{c}")
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<u32> = s.trim().chars().filter_map(|c| c.to_digit(10)).collect();
        if digits.len() != 3 || s.trim().chars().count() != 3 {
            return Err(Error::InvalidPattern(s.to_string()));
        }
        Self::from_entries([digits[0], digits[1], digits[2]])
            .ok_or_else(|| Error::InvalidPattern(s.to_string()))
    }
}

/// Brute-force containment: is some subsequence of `sigma` order-isomorphic
/// to `pattern`? Works for patterns of any length; `O(n^k)` worst case.
pub fn contains_reference(sigma: &[u32], pattern: &[u32]) -> bool {
    fn extend(sigma: &[u32], pattern: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
        let t = chosen.len();
        if t == pattern.len() {
            return true;
        }
        for i in start..sigma.len() {
            // Remaining pattern letters must still fit after position i.
            if sigma.len() - i < pattern.len() - t {
                break;
            }
            let candidate = sigma[i];
            let consistent = chosen
                .iter()
                .zip(pattern)
                .all(|(&c, &p)| (c < candidate) == (p < pattern[t]));
            if consistent {
                chosen.push(candidate);
                if extend(sigma, pattern, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    extend(sigma, pattern, 0, &mut Vec::with_capacity(pattern.len()))
}

/// Linear-time containment test for a length-3 pattern.
///
/// 231 is the stack-sorting test; 132, 213 and 312 reduce to it by reading
/// `sigma` backwards and/or complementing values. 123 and 321 scan for a
/// monotone triple.
pub fn contains_fast(sigma: &[u32], pattern: Pattern) -> bool {
    let top = sigma.len() as u32 + 1;
    match pattern {
        Pattern::P231 => !stack_sortable(sigma.iter().copied()),
        Pattern::P132 => !stack_sortable(sigma.iter().rev().copied()),
        Pattern::P213 => !stack_sortable(sigma.iter().map(|&v| top - v)),
        Pattern::P312 => !stack_sortable(sigma.iter().rev().map(|&v| top - v)),
        Pattern::P123 => has_increasing_triple(sigma.iter().copied()),
        Pattern::P321 => has_increasing_triple(sigma.iter().map(|&v| top - v)),
    }
}

/// A sequence of distinct values is stack-sortable iff it avoids 231.
fn stack_sortable(values: impl Iterator<Item = u32>) -> bool {
    let mut stack: Vec<u32> = Vec::new();
    let mut last_out = 0u32;
    for x in values {
        while let Some(&top) = stack.last() {
            if top > x {
                break;
            }
            if top < last_out {
                return false;
            }
            last_out = top;
            stack.pop();
        }
        stack.push(x);
    }
    while let Some(top) = stack.pop() {
        if top < last_out {
            return false;
        }
        last_out = top;
    }
    true
}

fn has_increasing_triple(values: impl Iterator<Item = u32>) -> bool {
    let mut smallest = u32::MAX;
    let mut middle = u32::MAX;
    for x in values {
        if x <= smallest {
            smallest = x;
        } else if x <= middle {
            middle = x;
        } else {
            return true;
        }
    }
    false
}

/// Advances `values` to its lexicographic successor; `false` once it is the
/// last (decreasing) arrangement.
pub(crate) fn next_permutation(values: &mut [u32]) -> bool {
    let n = values.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

/// Calls `visit` on every permutation of `1..=n` in lexicographic order.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[u32])) {
    let mut current: Vec<u32> = (1..=n as u32).collect();
    loop {
        visit(&current);
        if !next_permutation(&mut current) {
            break;
        }
    }
}

type ClassCache = Mutex<HashMap<(usize, Pattern), Arc<Vec<Permutation>>>>;

fn class_cache() -> &'static ClassCache {
    static CACHE: OnceLock<ClassCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Every `eta`-avoiding permutation of `1..=n`, in lexicographic order.
///
/// Built by filtering all of `S_n`, so `n` is limited to
/// [`ENUMERATION_MAX_N`]. Results are cached per `(n, eta)`.
pub fn enumerate_avoiding(n: usize, eta: Pattern) -> Result<Vec<Permutation>> {
    Ok(avoiding_class(n, eta)?.as_ref().clone())
}

/// Shared, cached form of [`enumerate_avoiding`].
pub fn avoiding_class(n: usize, eta: Pattern) -> Result<Arc<Vec<Permutation>>> {
    check_range("n", n, 1, ENUMERATION_MAX_N)?;
    if let Some(hit) = class_cache().lock().unwrap().get(&(n, eta)) {
        return Ok(Arc::clone(hit));
    }
    let mut class = Vec::new();
    for_each_permutation(n, |sigma| {
        if !contains_fast(sigma, eta) {
            class.push(Permutation(sigma.to_vec()));
        }
    });
    let class = Arc::new(class);
    class_cache()
        .lock()
        .unwrap()
        .insert((n, eta), Arc::clone(&class));
    Ok(class)
}
