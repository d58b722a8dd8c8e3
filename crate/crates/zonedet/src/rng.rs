//! SplitMix64: the fixed pseudo-random source used by every seeded
//! generator in this crate.
//!
//! The update is the standard SplitMix64 step (Steele, Lea & Flood):
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! output = z ^ (z >> 31)
//! ```
//!
//! Doubles are drawn as `(output >> 11) * 2^-53`, uniform in `[0, 1)`.
//! The generator is tiny and exactly reproducible in any language, which
//! keeps seeded matrices bit-identical across implementations.

use num_complex::Complex64;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `0..bound` (`bound > 0`).
    pub fn next_below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (self.next_f64() * bound as f64) as usize % bound
    }

    /// A complex number with the given magnitude and uniform random phase.
    pub fn next_phase(&mut self, magnitude: f64) -> Complex64 {
        let theta = 2.0 * std::f64::consts::PI * self.next_f64();
        Complex64::from_polar(magnitude, theta)
    }
}
