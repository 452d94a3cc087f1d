//! Seeded sampling for experiments.
//!
//! The generator is SplitMix64 (Steele, Lea and Flood), whose constants are
//! published, so a row can be regenerated in any language from its seed.
//! Derived streams are seeded with `mix(seed, index)`, which keeps every row
//! independent of how the rows are scheduled.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

/// Thin wrapper over SplitMix64 with the handful of draws the lab needs.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: SplitMix64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: SplitMix64::seed_from_u64(seed) }
    }

    /// Independent stream for the `index`-th job under `seed`.
    pub fn stream(seed: u64, index: u64) -> Self {
        Self::new(mix(seed, index))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform in `[0, bound)` by rejection, `bound ≥ 1`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty sampling range");
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.rng.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    /// Uniform in `[lo, hi]`.
    pub fn range_inclusive(&mut self, lo: u64, hi: u64) -> u64 {
        assert!(lo <= hi);
        lo + self.below(hi - lo + 1)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn unit(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform phase angle in `[0, 2π)`.
    pub fn phase(&mut self) -> f64 {
        std::f64::consts::TAU * self.unit()
    }
}

/// SplitMix64 finalizer applied to `seed ^ golden·(index + 1)`.
pub fn mix(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ 0x9E37_79B9_7F4A_7C15u64.wrapping_mul(index.wrapping_add(1));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
