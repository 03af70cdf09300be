//! Seeded pseudo-random generator.
//!
//! The generator is SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter
//! advanced by the golden-ratio gamma `0x9E3779B97F4A7C15`, with each output
//! passed through the murmur-style `mix64` finalizer (Stafford variant 13).
//! This algorithm is fixed: the same seed always yields the bit-identical
//! stream, on every platform.
//!
//! Independent sub-streams are derived rather than shared. A sub-stream for
//! purpose `tag` (and optional extra coordinates such as sample id or epoch)
//! starts from `mix64(parent_seed ^ mix64(tag))`, folding extra coordinates
//! the same way. Streams for different purposes never interleave, so adding
//! draws to one code path cannot shift the randomness of another.

/// Golden-ratio increment for the SplitMix64 counter.
const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Finalization mix (Stafford variant 13).
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// SplitMix64 generator state. Same seed, same stream, bit for bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RngState {
    state: u64,
}

/// Stream tags for the fixed sub-stream purposes used across the crate.
pub mod stream {
    pub const MODEL_INIT: u64 = 0x01;
    pub const PRETRAIN_SHUFFLE: u64 = 0x02;
    pub const ADAPT_SHUFFLE: u64 = 0x03;
    pub const WEAK_AUG: u64 = 0x04;
    pub const STRONG_AUG: u64 = 0x05;
    pub const GEN_PROJECTION_A: u64 = 0x06;
    pub const GEN_PROJECTION_M: u64 = 0x07;
    pub const GEN_SOURCE: u64 = 0x08;
    pub const GEN_TARGET: u64 = 0x09;
}

impl RngState {
    pub fn new(seed: u64) -> Self {
        RngState { state: seed }
    }

    /// Derive the sub-stream for `tag` from a base seed.
    pub fn substream(seed: u64, tag: u64) -> Self {
        RngState::new(mix64(seed ^ mix64(tag)))
    }

    /// Derive a sub-stream keyed by several coordinates (e.g. tag, sample
    /// id, epoch). Coordinates are folded left to right.
    pub fn substream_keyed(seed: u64, keys: &[u64]) -> Self {
        let mut s = seed;
        for &k in keys {
            s = mix64(s ^ mix64(k));
        }
        RngState::new(s)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform in [0, 1): the top 53 bits scaled by 2^-53.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
    }

    /// Uniform in (0, 1]: as `next_f64` but shifted off zero, for logs.
    fn next_f64_open(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / 9007199254740992.0)
    }

    /// Uniform in [lo, hi].
    pub fn next_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Unbiased integer in [0, n) by rejection sampling.
    pub fn next_below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "next_below(0)");
        let threshold = n.wrapping_neg() % n;
        loop {
            let r = self.next_u64();
            if r >= threshold {
                return r % n;
            }
        }
    }

    /// Standard normal via Box-Muller (cosine branch only; the sine value
    /// is discarded so draw count per call is fixed at two).
    pub fn next_gaussian(&mut self) -> f64 {
        let u1 = self.next_f64_open();
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }

    /// In-place Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = RngState::new(42);
        let mut b = RngState::new(42);
        for _ in 0..1000 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn substreams_diverge() {
        let mut a = RngState::substream(42, stream::MODEL_INIT);
        let mut b = RngState::substream(42, stream::ADAPT_SHUFFLE);
        let same = (0..100).filter(|_| a.next_u64() == b.next_u64()).count();
        assert_eq!(same, 0);
    }

    #[test]
    fn keyed_substream_deterministic() {
        let mut a = RngState::substream_keyed(7, &[stream::WEAK_AUG, 12, 3]);
        let mut b = RngState::substream_keyed(7, &[stream::WEAK_AUG, 12, 3]);
        let mut c = RngState::substream_keyed(7, &[stream::WEAK_AUG, 12, 4]);
        assert_eq!(a.next_u64(), b.next_u64());
        assert_ne!(a.next_u64(), c.next_u64());
    }

    #[test]
    fn unit_interval_bounds() {
        let mut rng = RngState::new(3);
        for _ in 0..10_000 {
            let u = rng.next_f64();
            assert!((0.0..1.0).contains(&u));
        }
    }

    #[test]
    fn next_below_unbiased_range() {
        let mut rng = RngState::new(9);
        let mut counts = [0usize; 5];
        for _ in 0..50_000 {
            counts[rng.next_below(5) as usize] += 1;
        }
        for &c in &counts {
            // 10000 expected; loose 5-sigma band
            assert!((c as f64 - 10_000.0).abs() < 700.0, "counts {counts:?}");
        }
    }

    #[test]
    fn gaussian_moments() {
        let mut rng = RngState::new(17);
        let n = 100_000;
        let (mut sum, mut sumsq) = (0.0, 0.0);
        for _ in 0..n {
            let g = rng.next_gaussian();
            sum += g;
            sumsq += g * g;
        }
        let mean = sum / n as f64;
        let var = sumsq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.02, "mean {mean}");
        assert!((var - 1.0).abs() < 0.03, "var {var}");
    }
}
