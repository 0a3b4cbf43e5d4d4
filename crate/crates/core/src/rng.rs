//! Deterministic seeding for parallel Monte Carlo.
//!
//! Replication r of a run with base seed s draws from a generator keyed by
//! `derive_seed(s, r)`, a SplitMix64 hash of the pair. Replications can then
//! execute in any order, on any number of threads, and reproduce the same
//! outcomes; nothing is shared between them.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Pure hash mapping (base seed, replication index) to a stream seed.
pub fn derive_seed(base: u64, replication: u64) -> u64 {
    splitmix64(splitmix64(base) ^ replication.wrapping_mul(GOLDEN_GAMMA))
}

/// Counter-mode generator for one replication.
pub fn replication_rng(base: u64, replication: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(base, replication))
}

/// Generator for a single (non-replicated) run.
pub fn run_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Exponential variate by inversion; strictly positive.
pub fn exp_variate<R: rand::Rng>(rng: &mut R, rate: f64) -> f64 {
    debug_assert!(rate > 0.0);
    // 1 - U lies in (0, 1], so the log is finite and the variate nonnegative.
    let u: f64 = rng.random();
    -(1.0 - u).ln() / rate
}
