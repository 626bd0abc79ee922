//! Deterministic sampling of rational parameters.
//!
//! All randomized checks in this crate draw from a seeded ChaCha8 stream,
//! so every run is reproducible. Coefficients are kept small (numerators
//! in `[-3, 3]`, denominators in `{1, 2}`) to bound the growth of exact
//! rationals through matrix exponentials and adjoints.

use crate::exactlin::{ratio, Rat};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

/// Default seed used when neither the environment nor the command line
/// supplies one.
pub const DEFAULT_SEED: u64 = 0x4D41_4E49_4E;

/// Environment variable that overrides any explicitly supplied seed.
pub const SEED_ENV_VAR: &str = "MANIN_SEED";

/// A fresh deterministic generator for the given seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Resolve the effective seed: the `MANIN_SEED` environment variable wins
/// over an explicit value, which wins over the default.
pub fn effective_seed(explicit: Option<u64>) -> u64 {
    if let Ok(text) = std::env::var(SEED_ENV_VAR) {
        if let Ok(v) = text.trim().parse::<u64>() {
            return v;
        }
    }
    explicit.unwrap_or(DEFAULT_SEED)
}

/// Small random rational: numerator in `[-3, 3]`, denominator in `{1, 2}`.
pub fn random_rat<R: Rng>(rng: &mut R) -> Rat {
    let num = rng.gen_range(-3i64..=3);
    let den = rng.gen_range(1i64..=2);
    ratio(num, den)
}

/// Small random nonzero rational, for group parameters that must be
/// invertible.
pub fn random_nonzero_rat<R: Rng>(rng: &mut R) -> Rat {
    loop {
        let r = random_rat(rng);
        if !num_traits::Zero::is_zero(&r) {
            return r;
        }
    }
}
