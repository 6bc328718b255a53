//! Deterministic randomness.
//!
//! Every random draw descends from one user-visible seed. Independent cases
//! get independent ChaCha streams selected by a case id, so results do not
//! depend on evaluation order or thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmath::{frac, Rational};

pub fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

/// A small rational `p/q` with `p ∈ [-9, 9]`, `q ∈ [1, 5]`.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}
