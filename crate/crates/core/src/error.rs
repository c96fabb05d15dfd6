//! Crate-wide error type.

/// Errors raised when constructing or validating domain values.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("non-finite component in input")]
    NonFinite,
    #[error("state norm is {norm}, expected 1 within {tol}")]
    NotNormalized { norm: f64, tol: f64 },
    #[error("matrix is not unitary: max |u\u{2020}u - I| = {err}")]
    NotUnitary { err: f64 },
    #[error("density matrix is not Hermitian: max |\u{3c1} - \u{3c1}\u{2020}| = {err}")]
    NotHermitian { err: f64 },
    #[error("density matrix trace is {trace}, expected 1")]
    TraceNotOne { trace: f64 },
    #[error("density matrix has eigenvalue {min_eigenvalue} below the floor")]
    NotPositive { min_eigenvalue: f64 },
    #[error("channel is not trace preserving: max |\u{3a3}K\u{2020}K - I| = {err}")]
    NotTracePreserving { err: f64 },
    #[error("channel must have 1 to 4 Kraus operators, got {count}")]
    KrausCount { count: usize },
    #[error("angle {value} outside [{lo}, {hi}]")]
    AngleOutOfRange { value: f64, lo: f64, hi: f64 },
    #[error("probability {value} outside [0, 1]")]
    InvalidProbability { value: f64 },
    #[error("payoff ordering violated: requires alpha > beta > gamma_mis (got {alpha}, {beta}, {gamma_mis})")]
    PayoffOrdering { alpha: f64, beta: f64, gamma_mis: f64 },
    #[error("payoff table is missing outcome \"{key}\"")]
    MissingOutcome { key: &'static str },
    #[error("outcome distribution sums to {sum}, expected 1 within {tol}")]
    InvalidDistribution { sum: f64, tol: f64 },
    #[error("grid resolution {grid_n} is too coarse, need at least {min}")]
    GridTooCoarse { grid_n: usize, min: usize },
    #[error("optimizer needs at least {min} restarts, got {restarts}")]
    TooFewRestarts { restarts: usize, min: usize },
    #[error("check needs at least one sample")]
    NoSamples,
    #[error("equilibrium report is empty")]
    EmptyReport,
}

pub type Result<T> = std::result::Result<T, Error>;
