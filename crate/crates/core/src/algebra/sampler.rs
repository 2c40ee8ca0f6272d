use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::Scalar;

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;
/// Numerators lie in `[-BOUND, BOUND]`, denominators in `[1, BOUND]`.
pub const BOUND: u64 = 97;

/// Deterministic stream of small rationals driven by a 64-bit linear
/// congruential generator. The same seed always yields the same stream on
/// every platform.
#[derive(Clone, Debug)]
pub struct RationalSampler {
    state: u64,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        let mut s = RationalSampler {
            state: seed ^ 0x9E37_79B9_7F4A_7C15,
        };
        s.step();
        s
    }

    /// Independent stream for `(seed, stream, index)`, so parallel workers
    /// can draw sample `index` without replaying earlier samples.
    pub fn for_sample(seed: u64, stream: u64, index: u64) -> Self {
        let mut s = RationalSampler::new(seed);
        s.state ^= stream.wrapping_mul(0xD1B5_4A32_D192_ED03);
        s.step();
        s.state ^= index.wrapping_mul(0x8CB9_2BA7_2F3D_8DD7);
        s.step();
        s.step();
        s
    }

    fn step(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(MULTIPLIER)
            .wrapping_add(INCREMENT);
        self.state
    }

    /// High bits only; the low bits of a power-of-two LCG are weak.
    pub fn next_u32(&mut self) -> u32 {
        (self.step() >> 32) as u32
    }

    pub fn below(&mut self, n: u64) -> u64 {
        u64::from(self.next_u32()) % n
    }

    pub fn next_scalar(&mut self) -> Scalar {
        let numer = self.below(2 * BOUND + 1) as i64 - BOUND as i64;
        let denom = self.below(BOUND) as i64 + 1;
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn next_nonzero(&mut self) -> Scalar {
        loop {
            let s = self.next_scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Small integer in `[-bound, bound]`.
    pub fn next_small_int(&mut self, bound: i64) -> i64 {
        self.below(2 * bound as u64 + 1) as i64 - bound
    }

    pub fn vector(&mut self, len: usize) -> Vec<Scalar> {
        (0..len).map(|_| self.next_scalar()).collect()
    }

    pub fn nonzero_vector(&mut self, len: usize) -> Vec<Scalar> {
        loop {
            let v = self.vector(len);
            if v.iter().any(|x| !x.is_zero()) {
                return v;
            }
        }
    }
}
