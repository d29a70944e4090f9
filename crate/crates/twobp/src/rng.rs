//! Seedable random stream with a pinned generator algorithm.
//!
//! All stochastic components draw from [`RandomStream`], a thin wrapper around
//! ChaCha8. The generator algorithm, the seeding scheme and the uniform-draw
//! code below are all fixed, so a given seed reproduces the exact same run on
//! every platform and in every release.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// A single-owner stream of pseudo-random draws.
///
/// Same seed, same draw sequence. Parallel callers must not share a stream;
/// derive one per task with [`RandomStream::derive`].
#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this stream was created from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Derives an independent stream for a named task.
    ///
    /// The derived seed depends only on this stream's seed and the tag, not on
    /// how many draws were already made, so per-task results are independent
    /// of scheduling order.
    pub fn derive(&self, tag: &str) -> RandomStream {
        RandomStream::new(splitmix64(self.seed ^ fnv1a64(tag.as_bytes())))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform draw from `[0, 1)` with 53 bits of precision.
    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform draw from `0..n`. Unbiased via rejection sampling.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0) is undefined");
        let zone = u64::MAX - (u64::MAX - n + 1) % n;
        loop {
            let v = self.next_u64();
            if v <= zone {
                return v % n;
            }
        }
    }

    /// Uniform draw from the inclusive integer range `[lo, hi]`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range [{lo}, {hi}]");
        lo + self.below((hi - lo) as u64 + 1) as i64
    }
}

/// FNV-1a over a byte string; used to fold task names into derived seeds.
fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// SplitMix64 finalizer; decorrelates derived seeds from xor artifacts.
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}
