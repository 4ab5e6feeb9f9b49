//! Seeded random streams.
//!
//! A run's stream is ChaCha8 keyed by the 64-bit root seed, with the ChaCha
//! stream id set to the run index. Streams for different run indices never
//! overlap and do not depend on the order in which runs are scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    run_index: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64, run_index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(run_index);
        RngStream {
            seed,
            run_index,
            rng,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn run_index(&self) -> u64 {
        self.run_index
    }

    /// Uniform draw in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// Uniform draw in `[low, high]`.
    pub fn uniform(&mut self, low: f64, high: f64) -> f64 {
        let v = low + (high - low) * self.unit();
        v.clamp(low, high)
    }

    /// Uniform index in `0..n`. Drawn through `u64` so the sequence does not
    /// depend on the host pointer width.
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0, "cannot draw an index from an empty range");
        self.rng.gen_range(0..n as u64) as usize
    }

    /// Uniform index in `0..n` that avoids every entry of `exclude`.
    pub fn index_excluding(&mut self, n: usize, exclude: &[usize]) -> usize {
        debug_assert!(exclude.iter().filter(|&&e| e < n).count() < n);
        loop {
            let i = self.index(n);
            if !exclude.contains(&i) {
                return i;
            }
        }
    }
}
