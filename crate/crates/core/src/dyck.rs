//! Dyck paths: uniform sampling by the cycle lemma and the peak bijection
//! onto 321-avoiding permutations.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::RngCore;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }
}

/// A sequence of `n` up and `n` down steps whose prefix sums never go
/// negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += s.delta();
            if height < 0 {
                return Err(Error::MalformedDyckPath(format!(
                    "prefix sum negative after step {}",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::MalformedDyckPath(format!("ends at height {height}")));
        }
        Ok(Self { steps })
    }

    /// Builds a path from `+1`/`-1` values.
    pub fn from_deltas(deltas: &[i64]) -> Result<Self> {
        let steps = deltas
            .iter()
            .map(|&d| match d {
                1 => Ok(Step::Up),
                -1 => Ok(Step::Down),
                other => Err(Error::MalformedDyckPath(format!("step {other} is not ±1"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn deltas(&self) -> Vec<i64> {
        self.steps.iter().map(|s| s.delta()).collect()
    }

    /// `(ups, downs)` preceding each peak, left to right.
    pub fn peaks(&self) -> Vec<(usize, usize)> {
        let mut peaks = Vec::new();
        let (mut ups, mut downs) = (0usize, 0usize);
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::Up => {
                    ups += 1;
                    if self.steps.get(i + 1) == Some(&Step::Down) {
                        peaks.push((ups, downs));
                    }
                }
                Step::Down => downs += 1,
            }
        }
        peaks
    }

    /// For each up step, the index of the down step that closes it.
    pub(crate) fn matching_downs(&self) -> Vec<usize> {
        let mut matching = vec![usize::MAX; self.steps.len()];
        let mut open = Vec::with_capacity(self.steps.len() / 2);
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::Up => open.push(i),
                Step::Down => {
                    let u = open.pop().expect("validated path");
                    matching[u] = i;
                }
            }
        }
        matching
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    /// Parses a `U`/`D` word.
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                other => Err(Error::MalformedDyckPath(format!("unexpected character `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

/// Uniform Dyck path of semilength `n`.
///
/// Shuffles `n` up steps with `n + 1` down steps, rotates the word to start
/// just after its first minimum prefix sum (the unique rotation whose proper
/// prefixes stay non-negative) and drops the final down step.
pub fn sample_dyck<R: RngCore + ?Sized>(n: usize, rng: &mut R) -> DyckPath {
    let mut word: Vec<Step> = std::iter::repeat_n(Step::Up, n)
        .chain(std::iter::repeat_n(Step::Down, n + 1))
        .collect();
    word.shuffle(rng);

    let mut height = 0i64;
    let mut min_height = 0i64;
    let mut start = 0usize;
    for (i, s) in word.iter().enumerate() {
        height += s.delta();
        if height < min_height {
            min_height = height;
            start = i + 1;
        }
    }
    let len = word.len();
    word.rotate_left(start % len);
    let last = word.pop();
    debug_assert_eq!(last, Some(Step::Down));
    DyckPath { steps: word }
}

/// All Dyck paths of semilength `n` in lexicographic order (`U < D`).
pub fn enumerate_dyck(n: usize) -> Vec<DyckPath> {
    fn grow(n: usize, ups: usize, downs: usize, word: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if ups == n && downs == n {
            out.push(DyckPath {
                steps: word.clone(),
            });
            return;
        }
        if ups < n {
            word.push(Step::Up);
            grow(n, ups + 1, downs, word, out);
            word.pop();
        }
        if downs < ups {
            word.push(Step::Down);
            grow(n, ups, downs + 1, word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    grow(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// Peak bijection from Dyck paths of semilength `n` onto 321-avoiding
/// permutations of `1..=n`.
///
/// A peak preceded by `a` up steps and `b` down steps sets `σ_{b+1} = a`;
/// the unused values fill the unused positions in increasing order.
pub fn dyck_to_321(path: &DyckPath) -> Permutation {
    let n = path.semilength();
    let mut entries = vec![0u32; n];
    let mut used = vec![false; n + 1];
    for (ups, downs) in path.peaks() {
        entries[downs] = ups as u32;
        used[ups] = true;
    }
    let mut free_values = (1..=n).filter(|&v| !used[v]);
    for slot in entries.iter_mut().filter(|e| **e == 0) {
        *slot = free_values.next().expect("as many free values as free slots") as u32;
    }
    Permutation::from_vec_unchecked(entries)
}

/// Which block of values sits before the maximum in the first-return
/// decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum PrefixBlock {
    /// Prefix holds the smallest values (231-avoiders).
    Low,
    /// Prefix holds the largest remaining values (132-avoiders).
    High,
}

/// Reads a 231- or 132-avoider off the first-return decomposition
/// `U A D B` of `path`: the maximum goes to position `|A|/2 + 1`, `A` is
/// laid out recursively before it and `B` after it.
///
/// For a uniform path the position of the maximum has law
/// `C_{j-1} C_{n-j} / C_n` and the two blocks are independent uniform
/// paths, so the result is uniform on the avoidance class.
pub(crate) fn first_return_layout(path: &DyckPath, prefix: PrefixBlock) -> Permutation {
    let n = path.semilength();
    let matching = path.matching_downs();
    let mut entries = vec![0u32; n];
    // (first step, end step exclusive, first position, value offset)
    let mut work = vec![(0usize, 2 * n, 0usize, 0u32)];
    while let Some((a, b, pos, base)) = work.pop() {
        if a >= b {
            continue;
        }
        let len = ((b - a) / 2) as u32;
        let close = matching[a];
        let left = ((close - a - 1) / 2) as u32;
        let right = len - 1 - left;
        entries[pos + left as usize] = base + len;
        let (left_base, right_base) = match prefix {
            PrefixBlock::Low => (base, base + left),
            PrefixBlock::High => (base + right, base),
        };
        work.push((a + 1, close, pos, left_base));
        work.push((close + 1, b, pos + left as usize + 1, right_base));
    }
    Permutation::from_vec_unchecked(entries)
}
