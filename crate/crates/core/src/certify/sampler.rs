//! Deterministic rational sampling for the certificates' audit steps.
//! A fixed xorshift generator keeps every run byte-identical.

use crate::rational::{self, Rational};

pub(crate) struct Sampler(u64);

impl Sampler {
    pub(crate) fn new(seed: u64) -> Self {
        Sampler(seed.max(1))
    }

    fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    /// Uniform-ish rational in `(0, 1]` with denominator up to `den`.
    pub(crate) fn unit(&mut self, den: u32) -> Rational {
        let d = den.max(1) as u64;
        let n = self.next_u64() % d + 1;
        rational::rat(n as i128, d as i128)
    }

    /// Rational strictly between `lo` and `hi` (den controls granularity).
    pub(crate) fn between(&mut self, lo: &Rational, hi: &Rational, den: u32) -> Rational {
        let d = (den.max(2) - 1) as u64;
        let n = self.next_u64() % d + 1; // in [1, den-1]
        lo + (hi - lo) * rational::rat(n as i128, den.max(2) as i128)
    }
}
