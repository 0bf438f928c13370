//! Seeded random elements for property checks and the CLI.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{LeibnizElement, RationalPolynomial};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Samples elements with polynomial degree `≤ max_degree` and coefficients
/// `p/q`, `|p| ≤ bound`, `1 ≤ q ≤ bound`.
#[derive(Debug, Clone, Copy)]
pub struct ElementSampler {
    pub max_degree: u32,
    pub bound: i64,
}

impl ElementSampler {
    pub fn new(max_degree: u32, bound: i64) -> Self {
        ElementSampler { max_degree, bound }
    }

    pub fn rational<R: Rng>(&self, rng: &mut R) -> BigRational {
        let numer = rng.gen_range(-self.bound..=self.bound);
        let denom = rng.gen_range(1..=self.bound);
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> LeibnizElement {
        let alpha = self.rational(rng);
        let beta = self.rational(rng);
        let gamma = self.rational(rng);
        let degree = rng.gen_range(0..=self.max_degree);
        let poly = RationalPolynomial::from_terms((0..=degree).map(|d| (d, self.rational(rng))));
        LeibnizElement { alpha, beta, gamma, poly }
    }

    /// Like [`ElementSampler::sample`] with integer coefficients in `[-bound, bound]`.
    pub fn sample_integral<R: Rng>(&self, rng: &mut R) -> LeibnizElement {
        let mut int = || BigRational::from_integer(BigInt::from(rng.gen_range(-self.bound..=self.bound)));
        let (alpha, beta, gamma) = (int(), int(), int());
        let poly = RationalPolynomial::from_terms((0..=self.max_degree).map(|d| (d, int())));
        LeibnizElement { alpha, beta, gamma, poly }
    }

    pub fn sample_seeded(&self, seed: u64) -> LeibnizElement {
        self.sample(&mut rng(seed))
    }
}
