//! Seeded samplers for the arrival-order distributions: uniform on `S_n`,
//! uniform on each avoidance class, and the adversarial "low" law.

use num_bigint::{BigInt, RandBigInt};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, RngCore};

use crate::dyck::{dyck_to_321, first_return_layout, sample_dyck, PrefixBlock};
use crate::error::{check_range, Result};
use crate::exact::catalan_sequence;
use crate::permutation::{Pattern, Permutation};

/// Fisher–Yates shuffle of `1..=n`.
pub fn sample_uniform<R: RngCore + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut entries: Vec<u32> = (1..=n as u32).collect();
    entries.shuffle(rng);
    Permutation::from_vec_unchecked(entries)
}

/// Uniform element of the `eta`-avoiding permutations of `1..=n`.
///
/// 231 and 132 are read off a uniform Dyck path through its first-return
/// decomposition; 213 and 312 are the complement and reverse-complement of
/// a 231 draw; 321 comes from the peak bijection and 123 is its complement.
/// The same source state therefore yields related draws across patterns.
pub fn sample_avoiding<R: RngCore + ?Sized>(n: usize, eta: Pattern, rng: &mut R) -> Permutation {
    match eta {
        Pattern::P231 => first_return_layout(&sample_dyck(n, rng), PrefixBlock::Low),
        Pattern::P132 => first_return_layout(&sample_dyck(n, rng), PrefixBlock::High),
        Pattern::P213 => sample_avoiding(n, Pattern::P231, rng).complement(),
        Pattern::P312 => sample_avoiding(n, Pattern::P231, rng).complement().reverse(),
        Pattern::P321 => dyck_to_321(&sample_dyck(n, rng)),
        Pattern::P123 => sample_avoiding(n, Pattern::P321, rng).complement(),
    }
}

/// Uniform 231- or 132-avoider built by drawing the position `j` of the
/// maximum from `P(j) = C_{j-1} C_{m-j} / C_m` for every block of size `m`
/// and recursing into both sides.
///
/// The draw is exact: an integer uniform on `[0, C_m)` is located in the
/// cumulative sums of `C_{j-1} C_{m-j}`. Cost grows roughly quadratically in
/// `n` with big-integer products, so this is the reference route rather than
/// the default one.
///
/// Panics if `eta` is not 231 or 132.
pub fn sample_avoiding_by_position_law<R: RngCore + ?Sized>(
    n: usize,
    eta: Pattern,
    rng: &mut R,
) -> Permutation {
    let prefix = match eta {
        Pattern::P231 => PrefixBlock::Low,
        Pattern::P132 => PrefixBlock::High,
        other => panic!("position-law sampler only covers 231 and 132, got {other}"),
    };
    let catalans = catalan_sequence(n);
    let mut entries = vec![0u32; n];
    // (block size, first position, value offset)
    let mut work = vec![(n, 0usize, 0u32)];
    while let Some((m, pos, base)) = work.pop() {
        if m == 0 {
            continue;
        }
        let j = draw_max_position(m, &catalans, rng);
        let left = (j - 1) as u32;
        let right = (m - j) as u32;
        entries[pos + j - 1] = base + m as u32;
        let (left_base, right_base) = match prefix {
            PrefixBlock::Low => (base, base + left),
            PrefixBlock::High => (base + right, base),
        };
        work.push((j - 1, pos, left_base));
        work.push((m - j, pos + j, right_base));
    }
    Permutation::from_vec_unchecked(entries)
}

fn draw_max_position<R: RngCore + ?Sized>(m: usize, catalans: &[BigInt], rng: &mut R) -> usize {
    let target = rng.gen_bigint_range(&BigInt::zero(), &catalans[m]);
    let mut cumulative = BigInt::zero();
    for j in 1..=m {
        cumulative += &catalans[j - 1] * &catalans[m - j];
        if target < cumulative {
            return j;
        }
    }
    unreachable!("cumulative weights sum to C_m")
}

/// How the positions after the maximum are filled in a low permutation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LowCompletion {
    #[default]
    Increasing,
    Decreasing,
}

/// `σ^{n;j}`: values `1..j-1` in order, then `n` at position `j`, then
/// `j..n-1` in the order chosen by `completion`.
pub fn low_permutation_with(n: usize, j: usize, completion: LowCompletion) -> Result<Permutation> {
    check_range("j", j, 1, n.max(1))?;
    let mut entries: Vec<u32> = (1..j as u32).collect();
    entries.push(n as u32);
    let tail = j as u32..n as u32;
    match completion {
        LowCompletion::Increasing => entries.extend(tail),
        LowCompletion::Decreasing => entries.extend(tail.rev()),
    }
    Ok(Permutation::from_vec_unchecked(entries))
}

pub fn low_permutation(n: usize, j: usize) -> Result<Permutation> {
    low_permutation_with(n, j, LowCompletion::Increasing)
}

/// `j` uniform on `1..=n`, then [`low_permutation`].
pub fn sample_low<R: RngCore + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    sample_low_with(n, LowCompletion::Increasing, rng)
}

pub fn sample_low_with<R: RngCore + ?Sized>(
    n: usize,
    completion: LowCompletion,
    rng: &mut R,
) -> Permutation {
    let j = rng.gen_range(1..=n as u64) as usize;
    low_permutation_with(n, j, completion).expect("j drawn in range")
}
