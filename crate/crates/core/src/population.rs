//! Seeded random instances for property suites and the theorem harness.
//!
//! Every generator is deterministic given its seed.

use num_integer::Integer;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::semigroups::{GluingSpec, NumericalSemigroup};

/// Shape limits for random numerical semigroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Most generators drawn before minimalization.
    pub max_generators: usize,
    /// Largest generator value.
    pub max_generator: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_generators: 4, max_generator: 40 }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One numerical semigroup of embedding dimension at least two.
pub fn random_numerical(rng: &mut ChaCha8Rng, bounds: Bounds) -> NumericalSemigroup {
    assert!(bounds.max_generators >= 2 && bounds.max_generator >= 3, "bounds admit no semigroup");
    loop {
        let k = rng.gen_range(2..=bounds.max_generators);
        let cand: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=bounds.max_generator)).collect();
        if cand.iter().fold(0u64, |g, x| g.gcd(x)) != 1 {
            continue;
        }
        if let Ok(s) = NumericalSemigroup::generated_by(&cand) {
            if s.embedding_dimension() >= 2 {
                return s;
            }
        }
    }
}

pub fn numerical_population(seed: u64, count: usize, bounds: Bounds) -> Vec<NumericalSemigroup> {
    let mut r = rng(seed);
    (0..count).map(|_| random_numerical(&mut r, bounds)).collect()
}

/// Valid gluings of random factors accepted by `keep`; coefficients are drawn
/// from `0..=max_coefficient`.
///
/// Gives up after `64 * count` attempts, so the result may be shorter than
/// `count` for very restrictive filters.
pub fn gluing_population(
    seed: u64,
    count: usize,
    bounds: Bounds,
    max_coefficient: u64,
    keep: impl Fn(&GluingSpec) -> bool,
) -> Vec<GluingSpec> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 64 * count.max(1) {
        attempts += 1;
        let left = random_numerical(&mut r, bounds);
        let right = random_numerical(&mut r, bounds);
        let b = (0..left.embedding_dimension()).map(|_| r.gen_range(0..=max_coefficient)).collect();
        let a = (0..right.embedding_dimension()).map(|_| r.gen_range(0..=max_coefficient)).collect();
        let spec = GluingSpec::new(left, right, b, a);
        if spec.violations().is_empty() && spec.glue().is_ok() && keep(&spec) {
            out.push(spec);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn populations_are_deterministic_and_bounded() {
        let b = Bounds::default();
        let p = numerical_population(7, 30, b);
        assert_eq!(p, numerical_population(7, 30, b));
        assert!(p.iter().all(|s| s.embedding_dimension() <= 4 && s.largest_generator() <= 40));
        assert_ne!(p, numerical_population(8, 30, b));
    }

    #[test]
    fn gluings_respect_the_filter() {
        let small = Bounds { max_generators: 3, max_generator: 12 };
        let g = gluing_population(1, 10, small, 3, |s| s.is_star());
        assert_eq!(g.len(), 10);
        assert!(g.iter().all(|s| s.is_star() && s.glue().is_ok()));
    }
}
