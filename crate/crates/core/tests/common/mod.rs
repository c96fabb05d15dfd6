#![allow(dead_code)] // not every suite uses every fixture

//! Shared fixtures for the integration suites: randomized but seeded
//! generators for states, densities, channels and tables.

use num_complex::Complex64;
use qbos_core::{BosParams, LocalChannel, PayoffTable, TwoQubitDensity, TwoQubitState};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn assert_close(a: f64, b: f64, tol: f64) {
    assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
}

/// Uniform-on-the-sphere-ish pure state: uniform components, normalized.
pub fn random_state(rng: &mut ChaCha8Rng) -> TwoQubitState {
    loop {
        let mut amp = [Complex64::new(0.0, 0.0); 4];
        for a in &mut amp {
            *a = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let norm = amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-3 {
            continue;
        }
        for a in &mut amp {
            *a /= norm;
        }
        return TwoQubitState::new(amp).expect("normalized by construction");
    }
}

/// Random mixed state: convex mixture of up to three random pure states.
pub fn random_density(rng: &mut ChaCha8Rng) -> TwoQubitDensity {
    let k = rng.gen_range(1..=3);
    let mut weights: Vec<f64> = (0..k).map(|_| rng.gen_range(0.1..1.0)).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let parts: Vec<(f64, TwoQubitState)> =
        weights.into_iter().map(|w| (w, random_state(rng))).collect();
    TwoQubitDensity::mixture(&parts).expect("weights normalized")
}

/// Random channel from the rank-two family (always trace preserving).
pub fn random_channel(rng: &mut ChaCha8Rng) -> LocalChannel {
    use std::f64::consts::{FRAC_PI_2, PI};
    let angles = [
        rng.gen_range(0.0..FRAC_PI_2),
        rng.gen_range(0.0..FRAC_PI_2),
        rng.gen_range(-PI..PI),
        rng.gen_range(0.0..PI),
        rng.gen_range(-PI..PI),
        rng.gen_range(-PI..PI),
    ];
    LocalChannel::rank_two(&angles).expect("family is trace preserving")
}

/// Random game table with payoffs in [-5, 5].
pub fn random_table(rng: &mut ChaCha8Rng) -> PayoffTable {
    let mut entries = [(0.0, 0.0); 4];
    for e in &mut entries {
        *e = (rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
    }
    PayoffTable::new(entries).expect("finite payoffs")
}

pub fn default_table() -> PayoffTable {
    PayoffTable::from_bos(&BosParams::default_game())
}
