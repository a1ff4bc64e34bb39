//! Reproducible random words.
//!
//! The generator is SplitMix64 with its state set to the seed. A letter over an
//! alphabet of size `m` is `(x · m) >> 64` for the next 64-bit output `x`, and a
//! word is its letters drawn left to right. Any implementation following these
//! three rules produces the same samples.

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::words::{Letter, Word};

#[derive(Clone, Debug)]
pub struct WordSampler {
    rng: SplitMix64,
}

impl WordSampler {
    pub fn new(seed: u64) -> Self {
        WordSampler {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// A value uniform in `0..m`, `m > 0`.
    pub fn below(&mut self, m: usize) -> usize {
        ((self.rng.next_u64() as u128 * m as u128) >> 64) as usize
    }

    pub fn letter(&mut self, m: usize) -> Letter {
        Letter(self.below(m) as u32)
    }

    /// A uniform word of length `len` over the first `m` letters.
    pub fn word(&mut self, m: usize, len: usize) -> Word {
        (0..len).map(|_| self.letter(m)).collect()
    }

    /// The first `m` letters in uniformly random order (Fisher–Yates, last position first).
    pub fn permutation(&mut self, m: usize) -> Word {
        let mut letters: Vec<Letter> = (0..m as u32).map(Letter).collect();
        for i in (1..m).rev() {
            let j = self.below(i + 1);
            letters.swap(i, j);
        }
        Word::from_letters(letters)
    }
}
