//! Seeded randomness. Every random choice in the crate flows from an explicit
//! `u64` seed through ChaCha8, so results are reproducible across platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kernel::{rat, Rational};

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform integers in `[-bound, bound]`, as rationals.
pub fn integer_vector(rng: &mut SeededRng, len: usize, bound: i64) -> Vec<Rational> {
    (0..len).map(|_| rat(rng.gen_range(-bound..=bound))).collect()
}
