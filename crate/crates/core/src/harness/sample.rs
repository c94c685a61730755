//! Seeded rational sampling for randomized identity trials.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::Rational;

/// Draw a rational with uniform numerator in `[-numerator_bound, numerator_bound]`
/// and uniform denominator in `[1, denominator_bound]`, reduced. Deterministic
/// given the generator state.
pub fn sample_rational(rng: &mut ChaCha8Rng, numerator_bound: i64, denominator_bound: i64) -> Rational {
    assert!(numerator_bound >= 1 && denominator_bound >= 1, "bounds must be positive");
    Rational::new(
        rng.gen_range(-numerator_bound..=numerator_bound),
        rng.gen_range(1..=denominator_bound),
    )
}

/// Stateful sampler carrying the seeded stream and the bounds.
pub struct RationalSampler {
    rng: ChaCha8Rng,
    numerator_bound: i64,
    denominator_bound: i64,
}

impl RationalSampler {
    pub fn new(seed: u64, numerator_bound: i64, denominator_bound: i64) -> Self {
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            numerator_bound,
            denominator_bound,
        }
    }

    pub fn sample(&mut self) -> Rational {
        sample_rational(&mut self.rng, self.numerator_bound, self.denominator_bound)
    }

    pub fn sample_nonzero(&mut self) -> Rational {
        loop {
            let r = self.sample();
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn integer_in(&mut self, lo: u32, hi: u32) -> u32 {
        self.rng.gen_range(lo..=hi)
    }
}
