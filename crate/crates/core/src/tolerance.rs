//! Numerical tolerances used across the crate.
//!
//! Double precision leaves ample headroom above the rounding accumulated by
//! chains of 4x4 complex products, so algebraic identities are held to 1e-12
//! while derived quantities that square amplitudes (overlaps, fidelities) get
//! 1e-9.

/// Tolerance for algebraic identities: unitarity, trace preservation,
/// normalization, Hermiticity, distribution sums after exact pipelines.
pub const ALGEBRAIC: f64 = 1e-12;

/// Tolerance for phase-insensitive state equality, |<a|b>| >= 1 - PHASE.
pub const PHASE: f64 = 1e-9;

/// Density-matrix eigenvalues may dip slightly negative from rounding;
/// anything above this floor is accepted rather than re-projected.
pub const EIGENVALUE_FLOOR: f64 = -1e-10;

/// Outcome distributions handed in from outside must sum to 1 within this.
pub const DISTRIBUTION_SUM: f64 = 1e-9;
