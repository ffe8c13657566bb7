//! Seeded instance generation.
//!
//! The stream is SplitMix64 seeded directly with the user seed. Every draw
//! consumes whole 64-bit outputs in a fixed order:
//!
//! * unit float: `(x >> 11) · 2⁻⁵³`, in `[0, 1)`
//! * coefficient: `4·unit − 2`, in `[−2, 2)`
//! * size in `1..=max_n`: `1 + x mod max_n`
//! * instance: size, then `a`, `b`, `c`, `d`

use hepta::HeptaParams;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

#[derive(Debug, Clone)]
pub struct InstanceGenerator {
    rng: SplitMix64,
}

impl InstanceGenerator {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn next_coeff(&mut self) -> f64 {
        4.0 * self.next_unit() - 2.0
    }

    pub fn next_size(&mut self, max_n: usize) -> usize {
        assert!(max_n >= 1);
        1 + (self.next_u64() % max_n as u64) as usize
    }

    pub fn next_params(&mut self, n: usize) -> HeptaParams {
        let a = self.next_coeff();
        let b = self.next_coeff();
        let c = self.next_coeff();
        let d = self.next_coeff();
        HeptaParams::new(n, a, b, c, d).expect("finite coefficients and n ≥ 1")
    }

    pub fn next_instance(&mut self, max_n: usize) -> HeptaParams {
        let n = self.next_size(max_n);
        self.next_params(n)
    }
}
