//! Seeded fixture builders shared by the benchmark targets.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qbos_core::{BosParams, LocalUnitary, PayoffTable, RestrictedProfile};

pub fn default_table() -> PayoffTable {
    PayoffTable::from_bos(&BosParams::default_game())
}

/// Deterministic batch of Haar-random tactic pairs.
pub fn haar_pairs(n: usize, seed: u64) -> Vec<(LocalUnitary, LocalUnitary)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| (LocalUnitary::random_su2(&mut rng), LocalUnitary::random_su2(&mut rng)))
        .collect()
}

/// Deterministic batch of flip-probability profiles covering the square.
pub fn restricted_profiles(n: usize) -> Vec<RestrictedProfile> {
    (0..n)
        .map(|i| {
            let t = i as f64 / n.max(1) as f64;
            RestrictedProfile::new(t, 1.0 - t).expect("in range")
        })
        .collect()
}
