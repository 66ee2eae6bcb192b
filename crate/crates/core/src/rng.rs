//! Seeded sampling. The generator is SplitMix64 so that reports are
//! reproducible across implementations.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

#[derive(Debug, Clone)]
pub struct SeededRng(SplitMix64);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform draw from `0..n` by rejection sampling on the low bits.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let mask = n.checked_next_power_of_two().map_or(u64::MAX, |m| m - 1);
        loop {
            let v = self.next_u64() & mask;
            if v < n {
                return v;
            }
        }
    }

    /// Uniform draw from `-bound..=bound`.
    pub fn signed(&mut self, bound: u64) -> i64 {
        let bound = bound.min(i64::MAX as u64 / 2);
        self.below(2 * bound + 1) as i64 - bound as i64
    }
}
