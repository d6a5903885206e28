//! Seeded random streams with cross-platform reproducible draw sequences.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::scalar::{real, Real};

/// Deterministic random stream.
///
/// Backed by the ChaCha12 counter-based generator (fixed, published constants;
/// the stream is a pure function of the 64-bit seed on every platform).
/// Child streams are split off with [`RngStream::derive`], which hashes the
/// parent seed together with a label — see [`derive_seed`] for the rule.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    rng: ChaCha12Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha12Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform draw in `[0, 1)`.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// Uniform draw in `[0, 1)` converted to the working scalar type.
    #[inline]
    pub fn next_real<S: Real>(&mut self) -> S {
        real(self.next_f64())
    }

    /// Uniform draw in `[lo, hi)`.
    #[inline]
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + self.next_f64() * (hi - lo)
    }

    /// Uniform index in `0..n`. Panics if `n == 0`.
    #[inline]
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0, "index range must be nonempty");
        self.rng.gen_range(0..n)
    }

    /// Splits off an independent child stream identified by `label`.
    pub fn derive(&self, label: &str) -> RngStream {
        RngStream::new(derive_seed(self.seed, &[label]))
    }
}

/// Derives a 64-bit seed from a master seed and a sequence of string parts.
///
/// The rule is FNV-1a over the little-endian bytes of the master seed followed
/// by each part's UTF-8 bytes, every field terminated by a `0xff` separator
/// byte (offset basis `0xcbf29ce484222325`, prime `0x100000001b3`).
pub fn derive_seed(master: u64, parts: &[&str]) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;

    let mut hash = OFFSET;
    let mut absorb = |byte: u8| {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(PRIME);
    };
    for byte in master.to_le_bytes() {
        absorb(byte);
    }
    absorb(0xff);
    for part in parts {
        for byte in part.as_bytes() {
            absorb(*byte);
        }
        absorb(0xff);
    }
    hash
}
