//! Counter-based random source.
//!
//! Output `k` of a source is `mix(key + k * GAMMA)`, the SplitMix64 output
//! function applied to a counter. The key is derived from a seed and an
//! optional list of stream coordinates (e.g. a trial index), so any trial's
//! randomness can be reconstructed from `(seed, trial)` alone.

use rand_core::{impls, Error as RandError, RngCore};

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomSource {
    seed: u64,
    key: u64,
    counter: u64,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self::for_stream(seed, &[])
    }

    /// Independent stream identified by `seed` and a coordinate path.
    pub fn for_stream(seed: u64, coordinates: &[u64]) -> Self {
        let mut key = mix(seed ^ 0x5EC2_E7A2_0000_0001);
        for &c in coordinates {
            key = mix(key ^ mix(c.wrapping_add(GAMMA)));
        }
        Self {
            seed,
            key,
            counter: 0,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of 64-bit words drawn so far.
    pub fn draws(&self) -> u64 {
        self.counter
    }
}

impl RngCore for RandomSource {
    fn next_u32(&mut self) -> u32 {
        (self.next_u64() >> 32) as u32
    }

    fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix(self.key.wrapping_add(self.counter.wrapping_mul(GAMMA)))
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        impls::fill_bytes_via_next(self, dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), RandError> {
        self.fill_bytes(dest);
        Ok(())
    }
}
