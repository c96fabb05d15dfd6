//! Exact simulation and equilibrium analysis for quantized 2x2 static games.
//!
//! The crate models the quantum Battle of the Sexes in two quantization
//! pipelines: the "initial entangled strategy" pipeline, where a referee hands
//! the players a joint two-qubit state that they manipulate locally before a
//! computational-basis measurement, and the entangling-gate pipeline, which
//! prepares the same state from |00> with a gate J and undoes it with J-dagger
//! before measuring. Everything is exact 4-dimensional linear algebra; payoffs
//! are expectations, never sampled.
//!
//! Module map:
//! - [`qcore`]: states, local unitaries, Kraus channels, measurement.
//! - [`game`]: payoff tables and classical mixed-strategy equilibria.
//! - [`schemes`]: the two quantization pipelines and the tactic spaces.
//! - [`analysis`]: equilibrium enumeration, payoff suprema, claim checks.

pub mod analysis;
pub mod error;
pub mod game;
pub mod qcore;
pub mod schemes;
pub mod tolerance;

pub use error::{Error, Result};
pub use game::{
    BosParams, ClassicalMixed, Equilibrium, EquilibriumReport, Outcome, PayoffTable,
};
pub use qcore::{
    EntanglingGate, LocalChannel, LocalUnitary, Seat, TwoQubitDensity, TwoQubitState,
};
pub use schemes::{BridgeComparison, PlayOutcome, RestrictedProfile, SchemeConfig, TacticProfile};
pub use analysis::{
    ChannelSearchMode, ChannelSupremum, ConjugateCheck, DilemmaReport, EntanglementWitness,
    SupremumResult,
};
