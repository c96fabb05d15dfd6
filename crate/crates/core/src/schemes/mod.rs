//! The two quantization pipelines over the qcore primitives.
//!
//! Both hand the players one qubit each of a joint "strategy" state, let
//! them apply local tactics, and score a computational-basis measurement
//! against a payoff table. They differ in how the strategy state enters and
//! leaves: the first (initial-state) pipeline starts from an arbitrary
//! supplied state and measures right after the tactics; the gate-based
//! pipeline prepares the state from |00> with an entangling gate J and
//! applies the inverse gate before measuring. Drop that inverse gate and
//! the two coincide, which [`scheme_bridge`] demonstrates directly.

use crate::error::{Error, Result};
use crate::game::PayoffTable;
use crate::qcore::{
    EntanglingGate, LocalChannel, LocalUnitary, Seat, TwoQubitDensity, TwoQubitState,
};
use crate::BosParams;

/// The restricted tactic space: each player mixes between doing nothing and
/// applying the spin flip. `p` and `q` are the flip probabilities of
/// players 1 and 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RestrictedProfile {
    p: f64,
    q: f64,
}

impl RestrictedProfile {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        for v in [p, q] {
            if !v.is_finite() || !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidProbability { value: v });
            }
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }
}

/// A joint tactic choice, one entry per tactic space.
#[derive(Debug, Clone, PartialEq)]
pub enum TacticProfile {
    /// Probabilistic identity-or-flip play.
    Restricted(RestrictedProfile),
    /// Arbitrary local unitaries (player 1, player 2).
    Unitary(LocalUnitary, LocalUnitary),
    /// Arbitrary local channels (player 1, player 2): the widest space,
    /// including measurement and ancilla-assisted manipulations.
    Channel(LocalChannel, LocalChannel),
}

/// Which pipeline to play and its defining parameter.
#[derive(Debug, Clone, PartialEq)]
pub enum SchemeConfig {
    /// Initial-state pipeline with the supplied strategy state.
    MarinattoWeber { initial: TwoQubitState },
    /// Gate-based pipeline with entangling angle `gamma_e` in [0, pi/2].
    Eisert { gamma_e: f64 },
}

impl SchemeConfig {
    pub fn marinatto_weber(initial: TwoQubitState) -> Self {
        Self::MarinattoWeber { initial }
    }

    pub fn eisert(gamma_e: f64) -> Result<Self> {
        EntanglingGate::entangler(gamma_e)?;
        Ok(Self::Eisert { gamma_e })
    }

    /// The state the players receive before their tactics phase.
    pub fn pre_tactic_state(&self) -> TwoQubitState {
        match self {
            Self::MarinattoWeber { initial } => initial.clone(),
            Self::Eisert { gamma_e } => {
                let j = EntanglingGate::entangler(*gamma_e)
                    .expect("gamma_e validated at construction");
                TwoQubitState::basis(0, 0).apply_gate(&j)
            }
        }
    }
}

/// Distribution and expected payoffs of one play.
#[derive(Debug, Clone, PartialEq)]
pub struct PlayOutcome {
    pub dist: [f64; 4],
    pub payoffs: (f64, f64),
}

/// Final mixed state of the restricted game: the four identity/flip
/// combinations weighted by (1-p)(1-q), (1-p)q, p(1-q), pq.
pub fn mw_final_density(initial: &TwoQubitState, profile: &RestrictedProfile) -> TwoQubitDensity {
    let x = LocalUnitary::sigma_x();
    let (p, q) = (profile.p, profile.q);
    let flipped1 = initial.apply_local_unitary(&x, Seat::Player1);
    let parts = [
        ((1.0 - p) * (1.0 - q), initial.clone()),
        ((1.0 - p) * q, initial.apply_local_unitary(&x, Seat::Player2)),
        (p * (1.0 - q), flipped1.clone()),
        (p * q, flipped1.apply_local_unitary(&x, Seat::Player2)),
    ];
    TwoQubitDensity::mixture(&parts).expect("mixture weights form a probability vector")
}

/// Expected payoffs of the restricted game.
///
/// For the maximally entangled initial state this reduces to the closed form
/// of [`phi_plus_closed_form`]: the matched weight m = (1-p)(1-q) + pq pays
/// (alpha+beta)/2 and the rest pays the mismatch payoff.
pub fn mw_expected_payoffs(
    initial: &TwoQubitState,
    profile: &RestrictedProfile,
    table: &PayoffTable,
) -> (f64, f64) {
    let dist = mw_final_density(initial, profile).outcome_distribution();
    table.expected_unchecked(&dist)
}

/// Closed-form restricted-game payoffs on the maximally entangled state:
/// m (alpha+beta)/2 + (1-m) gamma_mis to each player, m = (1-p)(1-q) + pq.
pub fn phi_plus_closed_form(profile: &RestrictedProfile, params: &BosParams) -> (f64, f64) {
    let (p, q) = (profile.p, profile.q);
    let m = (1.0 - p) * (1.0 - q) + p * q;
    let value = m * (params.alpha + params.beta) / 2.0 + (1.0 - m) * params.gamma_mis;
    (value, value)
}

/// Plays the initial-state pipeline: apply the profile to the strategy
/// state, measure both qubits, score.
pub fn mw_play(
    initial: &TwoQubitState,
    tactics: &TacticProfile,
    table: &PayoffTable,
) -> PlayOutcome {
    let dist = match tactics {
        TacticProfile::Restricted(r) => mw_final_density(initial, r).outcome_distribution(),
        TacticProfile::Unitary(a, b) => initial
            .apply_local_unitary(a, Seat::Player1)
            .apply_local_unitary(b, Seat::Player2)
            .outcome_distribution(),
        TacticProfile::Channel(k1, k2) => initial
            .to_density()
            .apply_channel(k1, Seat::Player1)
            .apply_channel(k2, Seat::Player2)
            .outcome_distribution(),
    };
    PlayOutcome { payoffs: table.expected_unchecked(&dist), dist }
}

/// Plays the gate-based pipeline: measure J^dagger (A (x) B) J |00> and score.
pub fn eisert_play(
    gamma_e: f64,
    a: &LocalUnitary,
    b: &LocalUnitary,
    table: &PayoffTable,
) -> Result<PlayOutcome> {
    let j = EntanglingGate::entangler(gamma_e)?;
    let dist = TwoQubitState::basis(0, 0)
        .apply_gate(&j)
        .apply_local_unitary(a, Seat::Player1)
        .apply_local_unitary(b, Seat::Player2)
        .apply_gate(&j.dagger())
        .outcome_distribution();
    Ok(PlayOutcome { payoffs: table.expected_unchecked(&dist), dist })
}

/// Side-by-side run of the two pipelines on the same inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct BridgeComparison {
    /// Initial-state pipeline with the strategy state set to J|00>.
    pub mw_dist: [f64; 4],
    /// Full gate-based pipeline, inverse gate included.
    pub eisert_dist: [f64; 4],
    /// Gate-based pipeline with the inverse gate replaced by the identity.
    pub eisert_no_inverse_dist: [f64; 4],
    pub tv_mw_vs_eisert: f64,
    pub tv_mw_vs_no_inverse: f64,
    pub tv_eisert_vs_no_inverse: f64,
}

/// Demonstrates that the two schemes coincide exactly once the inverse gate
/// is dropped: plays (i) the initial-state pipeline with strategy J|00>,
/// (ii) the full gate-based pipeline, and (iii) the gate-based pipeline with
/// the inverse gate replaced by the identity, and reports all pairwise
/// total-variation distances. (i) and (iii) agree within 1e-12 on any input.
pub fn scheme_bridge(
    gamma_e: f64,
    a: &LocalUnitary,
    b: &LocalUnitary,
    table: &PayoffTable,
) -> Result<BridgeComparison> {
    let j = EntanglingGate::entangler(gamma_e)?;
    let initial = TwoQubitState::basis(0, 0).apply_gate(&j);

    let mw_dist = mw_play(&initial, &TacticProfile::Unitary(a.clone(), b.clone()), table).dist;
    let eisert_dist = eisert_play(gamma_e, a, b, table)?.dist;
    let identity_gate = EntanglingGate::entangler(0.0).expect("zero angle is in range");
    let eisert_no_inverse_dist = TwoQubitState::basis(0, 0)
        .apply_gate(&j)
        .apply_local_unitary(a, Seat::Player1)
        .apply_local_unitary(b, Seat::Player2)
        .apply_gate(&identity_gate)
        .outcome_distribution();

    Ok(BridgeComparison {
        tv_mw_vs_eisert: total_variation(&mw_dist, &eisert_dist),
        tv_mw_vs_no_inverse: total_variation(&mw_dist, &eisert_no_inverse_dist),
        tv_eisert_vs_no_inverse: total_variation(&eisert_dist, &eisert_no_inverse_dist),
        mw_dist,
        eisert_dist,
        eisert_no_inverse_dist,
    })
}

/// Total variation distance: half the L1 distance between distributions.
pub fn total_variation(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    0.5 * a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum::<f64>()
}
