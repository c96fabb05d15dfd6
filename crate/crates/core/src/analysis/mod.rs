//! Equilibrium enumeration in the restricted game, payoff-supremum searches
//! over the wider tactic spaces, and claim-verification reports.

mod nelder_mead;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::game::{equilibria_on_unit_square, EquilibriumReport, PayoffTable};
use crate::qcore::{LocalChannel, LocalUnitary, Seat, TwoQubitState};
use crate::schemes::{mw_expected_payoffs, mw_play, RestrictedProfile, TacticProfile};
use nelder_mead::{nelder_mead_max, Bounds};

/// Outcome of a payoff-supremum search.
#[derive(Debug, Clone)]
pub struct SupremumResult {
    /// Best payoff to player 1 over every profile evaluated.
    pub best_value: f64,
    /// The profile attaining it; re-evaluating it reproduces `best_value`.
    pub best_profile: TacticProfile,
    /// Angle coordinates of the best profile in the search family.
    pub best_params: Vec<f64>,
    /// (evaluation index, best value so far), recorded at each improvement.
    pub trace: Vec<(usize, f64)>,
    /// Master seed of the randomized restarts; None for exhaustive modes.
    pub seed: Option<u64>,
    /// Total number of payoff evaluations.
    pub evaluations: usize,
}

/// Uniqueness analysis of an equilibrium set.
#[derive(Debug, Clone, PartialEq)]
pub struct DilemmaReport {
    /// Number of profile-distinct equilibria.
    pub profile_distinct: usize,
    /// Number of payoff-distinct equilibria.
    pub payoff_distinct: usize,
    /// Payoff pair of each listed equilibrium, in report order.
    pub payoffs: Vec<(f64, f64)>,
    /// Whether the pure (corner) equilibria all pay the same, within tol;
    /// falls back to comparing every equilibrium when none is pure. This is
    /// what separates the quantum restricted game, where both pure solutions
    /// pay (alpha+beta)/2 to each player, from the classical game, where the
    /// two pure solutions favor different players.
    pub all_payoffs_equal: bool,
    /// True exactly when a single profile-distinct equilibrium exists; a
    /// false value means several profiles remain to coordinate on.
    pub unique_solution: bool,
}

/// Result of the conjugate-response identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjugateCheck {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// Worst fidelity |<phi+| (A (x) A*) |phi+>| over every sample.
    pub min_overlap: f64,
    pub pass: bool,
}

/// Off-diagonal coherence |<00|rho|11>| before and after a measuring channel
/// on either seat; a drop to zero witnesses the entanglement being destroyed.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementWitness {
    pub before: f64,
    pub after_player1: f64,
    pub after_player2: f64,
}

/// Supremum search over channel tactics plus the entanglement witness.
#[derive(Debug, Clone)]
pub struct ChannelSupremum {
    pub supremum: SupremumResult,
    pub witness: EntanglementWitness,
}

/// How to search the channel tactic space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelSearchMode {
    /// Evaluate the explicit identity / measure-and-set profiles only.
    Demo,
    /// Additionally optimize over the six-angle rank-two Kraus family per
    /// player, seeded with the demo profiles.
    Search { restarts: usize, iters: usize, seed: u64 },
}

/// All epsilon-equilibria of the restricted game over flip probabilities
/// (p, q) in [0,1]^2, for an arbitrary initial strategy state.
pub fn restricted_equilibria(
    initial: &TwoQubitState,
    table: &PayoffTable,
    grid_n: usize,
    eps: f64,
) -> Result<EquilibriumReport> {
    if grid_n < 101 {
        return Err(Error::GridTooCoarse { grid_n, min: 101 });
    }
    let payoff = |p: f64, q: f64| {
        let profile = RestrictedProfile::new(p, q).expect("search stays inside the unit square");
        mw_expected_payoffs(initial, &profile, table)
    };
    Ok(equilibria_on_unit_square(payoff, grid_n, eps))
}

/// Counts distinct equilibria and flags whether the players are left with a
/// genuine choice among them.
pub fn dilemma_report(report: &EquilibriumReport, tol: f64) -> Result<DilemmaReport> {
    if report.equilibria.is_empty() {
        return Err(Error::EmptyReport);
    }
    let eqs = &report.equilibria;

    let profile_distinct = count_distinct(eqs.len(), |i, j| {
        (eqs[i].p - eqs[j].p).abs() <= tol && (eqs[i].q - eqs[j].q).abs() <= tol
    });
    let payoff_distinct = count_distinct(eqs.len(), |i, j| {
        (eqs[i].payoffs.0 - eqs[j].payoffs.0).abs() <= tol
            && (eqs[i].payoffs.1 - eqs[j].payoffs.1).abs() <= tol
    });

    let pure: Vec<&crate::game::Equilibrium> = eqs.iter().filter(|e| !e.interior).collect();
    let compare: Vec<(f64, f64)> = if pure.is_empty() {
        eqs.iter().map(|e| e.payoffs).collect()
    } else {
        pure.iter().map(|e| e.payoffs).collect()
    };
    let all_payoffs_equal = compare.iter().all(|(a, b)| {
        (a - compare[0].0).abs() <= tol && (b - compare[0].1).abs() <= tol
    });

    Ok(DilemmaReport {
        profile_distinct,
        payoff_distinct,
        payoffs: eqs.iter().map(|e| e.payoffs).collect(),
        all_payoffs_equal,
        unique_solution: profile_distinct == 1,
    })
}

fn count_distinct(n: usize, same: impl Fn(usize, usize) -> bool) -> usize {
    let mut representatives: Vec<usize> = Vec::new();
    for i in 0..n {
        if !representatives.iter().any(|&r| same(i, r)) {
            representatives.push(i);
        }
    }
    representatives.len()
}

/// For Haar-random A, checks that player 2 answering with the elementwise
/// conjugate restores the maximally entangled strategy up to global phase:
/// |<phi+| (A (x) A*) |phi+>| >= 1 - tol for every sample.
pub fn conjugate_response_check(samples: usize, seed: u64, tol: f64) -> Result<ConjugateCheck> {
    if samples == 0 {
        return Err(Error::NoSamples);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phi = TwoQubitState::phi_plus();
    let mut min_overlap = f64::INFINITY;
    for _ in 0..samples {
        let a = LocalUnitary::random_su2(&mut rng);
        let out = phi
            .apply_local_unitary(&a, Seat::Player1)
            .apply_local_unitary(&a.conjugate(), Seat::Player2);
        min_overlap = min_overlap.min(phi.inner(&out).norm());
    }
    Ok(ConjugateCheck { samples, seed, tol, min_overlap, pass: min_overlap >= 1.0 - tol })
}

/// Tracks every payoff evaluation of a search and remembers the best.
struct Tracker<F: FnMut(&[f64]) -> f64> {
    f: F,
    evaluations: usize,
    best_value: f64,
    best_params: Vec<f64>,
    trace: Vec<(usize, f64)>,
}

impl<F: FnMut(&[f64]) -> f64> Tracker<F> {
    fn new(f: F) -> Self {
        Self {
            f,
            evaluations: 0,
            best_value: f64::NEG_INFINITY,
            best_params: Vec::new(),
            trace: Vec::new(),
        }
    }

    fn eval(&mut self, x: &[f64]) -> f64 {
        let v = (self.f)(x);
        self.evaluations += 1;
        if v > self.best_value {
            self.best_value = v;
            self.best_params = x.to_vec();
            self.trace.push((self.evaluations, v));
        }
        v
    }
}

/// Multi-start driver: evaluates the structured seeds, launches local
/// refinements from the most promising ones plus uniformly random starts,
/// and merges deterministically in start order.
fn multistart_max<F: FnMut(&[f64]) -> f64>(
    f: F,
    bounds: &Bounds,
    structured_seeds: &[Vec<f64>],
    restarts: usize,
    iters: usize,
    seed: u64,
) -> (Vec<f64>, f64, Vec<(usize, f64)>, usize) {
    let mut tracker = Tracker::new(f);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut ranked: Vec<(Vec<f64>, f64)> = structured_seeds
        .iter()
        .map(|s| {
            let mut s = s.clone();
            bounds.clamp(&mut s);
            let v = tracker.eval(&s);
            (s, v)
        })
        .collect();
    ranked.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());

    let seeded_starts = restarts.div_ceil(2).min(ranked.len());
    let mut starts: Vec<Vec<f64>> = ranked[..seeded_starts].iter().map(|(s, _)| s.clone()).collect();
    while starts.len() < restarts {
        let x: Vec<f64> = bounds
            .lo
            .iter()
            .zip(&bounds.hi)
            .map(|(lo, hi)| rng.gen_range(*lo..=*hi))
            .collect();
        starts.push(x);
    }

    for start in &starts {
        nelder_mead_max(&mut |x: &[f64]| tracker.eval(x), start, bounds, iters);
    }

    (tracker.best_params, tracker.best_value, tracker.trace, tracker.evaluations)
}

const MIN_RESTARTS: usize = 8;

fn su2_pair(params: &[f64]) -> TacticProfile {
    let a = LocalUnitary::su2(params[0], params[1], params[2]).expect("angles are clamped finite");
    let b = LocalUnitary::su2(params[3], params[4], params[5]).expect("angles are clamped finite");
    TacticProfile::Unitary(a, b)
}

/// Maximizes player 1's expected payoff over both players' SU(2) tactics,
/// by multi-start simplex refinement over the six Euler angles seeded on a
/// coarse angle grid. On the maximally entangled strategy the supremum is
/// (alpha+beta)/2 and no profile can exceed it.
pub fn unitary_payoff_supremum(
    table: &PayoffTable,
    initial: &TwoQubitState,
    restarts: usize,
    iters: usize,
    seed: u64,
) -> Result<SupremumResult> {
    if restarts < MIN_RESTARTS {
        return Err(Error::TooFewRestarts { restarts, min: MIN_RESTARTS });
    }
    let pi = std::f64::consts::PI;
    let half = std::f64::consts::FRAC_PI_2;
    let bounds = Bounds {
        lo: vec![0.0, -pi, -pi, 0.0, -pi, -pi],
        hi: vec![pi, pi, pi, pi, pi, pi],
    };

    // 3 values per angle: theta in {0, pi/2, pi}, phases in {-pi/2, 0, pi/2}.
    let theta_values = [0.0, half, pi];
    let phase_values = [-half, 0.0, half];
    let mut seeds = Vec::with_capacity(729);
    for &t1 in &theta_values {
        for &f1 in &phase_values {
            for &l1 in &phase_values {
                for &t2 in &theta_values {
                    for &f2 in &phase_values {
                        for &l2 in &phase_values {
                            seeds.push(vec![t1, f1, l1, t2, f2, l2]);
                        }
                    }
                }
            }
        }
    }

    let objective = |x: &[f64]| mw_play(initial, &su2_pair(x), table).payoffs.0;
    let (best_params, best_value, trace, evaluations) =
        multistart_max(objective, &bounds, &seeds, restarts, iters, seed);

    Ok(SupremumResult {
        best_value,
        best_profile: su2_pair(&best_params),
        best_params,
        trace,
        seed: Some(seed),
        evaluations,
    })
}

/// The named demo channels with their six-angle coordinates in the rank-two
/// family: identity, measure-and-set-0, measure-and-set-1.
fn demo_channels() -> Vec<(&'static str, [f64; 6], LocalChannel)> {
    use std::f64::consts::{FRAC_PI_2, PI};
    vec![
        ("identity", [0.0; 6], LocalChannel::identity()),
        ("measure-set-0", [0.0, FRAC_PI_2, PI, 0.0, 0.0, 0.0], LocalChannel::measure_and_set(0)),
        ("measure-set-1", [FRAC_PI_2, 0.0, -PI, 0.0, 0.0, 0.0], LocalChannel::measure_and_set(1)),
    ]
}

fn channel_pair(params: &[f64]) -> TacticProfile {
    let k1 = LocalChannel::rank_two(params[..6].try_into().expect("6 angles per player"))
        .expect("family is trace preserving for clamped angles");
    let k2 = LocalChannel::rank_two(params[6..].try_into().expect("6 angles per player"))
        .expect("family is trace preserving for clamped angles");
    TacticProfile::Channel(k1, k2)
}

/// Maximizes player 1's expected payoff over channel tactics.
///
/// Demo mode evaluates the explicit identity / measure-and-set profiles; on
/// the maximally entangled strategy the best is the double measure-and-set-0
/// play, which raises the attainable payoff from (alpha+beta)/2 to alpha by
/// destroying the entanglement. Search mode additionally optimizes over the
/// rank-two Kraus family. The witness reports |<00|rho|11>| before and after
/// a measuring channel on either seat.
pub fn channel_payoff_supremum(
    table: &PayoffTable,
    initial: &TwoQubitState,
    mode: ChannelSearchMode,
) -> Result<ChannelSupremum> {
    let rho = initial.to_density();
    let measure = LocalChannel::measure_and_set(0);
    let witness = EntanglementWitness {
        before: rho.element(0, 3).norm(),
        after_player1: rho.apply_channel(&measure, Seat::Player1).element(0, 3).norm(),
        after_player2: rho.apply_channel(&measure, Seat::Player2).element(0, 3).norm(),
    };

    let demos = demo_channels();
    let supremum = match mode {
        ChannelSearchMode::Demo => {
            let mut best: Option<(f64, TacticProfile, Vec<f64>)> = None;
            let mut trace = Vec::new();
            let mut evaluations = 0;
            for (_, angles1, k1) in &demos {
                for (_, angles2, k2) in &demos {
                    let profile = TacticProfile::Channel(k1.clone(), k2.clone());
                    let value = mw_play(initial, &profile, table).payoffs.0;
                    evaluations += 1;
                    if best.as_ref().is_none_or(|(v, _, _)| value > *v) {
                        trace.push((evaluations, value));
                        let params = angles1.iter().chain(angles2.iter()).copied().collect();
                        best = Some((value, profile, params));
                    }
                }
            }
            let (best_value, best_profile, best_params) =
                best.expect("demo set is non-empty");
            SupremumResult {
                best_value,
                best_profile,
                best_params,
                trace,
                seed: None,
                evaluations,
            }
        }
        ChannelSearchMode::Search { restarts, iters, seed } => {
            if restarts < MIN_RESTARTS {
                return Err(Error::TooFewRestarts { restarts, min: MIN_RESTARTS });
            }
            let pi = std::f64::consts::PI;
            let half = std::f64::consts::FRAC_PI_2;
            let per_player_lo = [0.0, 0.0, -pi, 0.0, -pi, -pi];
            let per_player_hi = [half, half, pi, pi, pi, pi];
            let bounds = Bounds {
                lo: per_player_lo.iter().chain(per_player_lo.iter()).copied().collect(),
                hi: per_player_hi.iter().chain(per_player_hi.iter()).copied().collect(),
            };
            let mut seeds = Vec::with_capacity(9);
            for (_, a1, _) in &demos {
                for (_, a2, _) in &demos {
                    seeds.push(a1.iter().chain(a2.iter()).copied().collect());
                }
            }
            let objective = |x: &[f64]| mw_play(initial, &channel_pair(x), table).payoffs.0;
            let (best_params, best_value, trace, evaluations) =
                multistart_max(objective, &bounds, &seeds, restarts, iters, seed);
            SupremumResult {
                best_value,
                best_profile: channel_pair(&best_params),
                best_params,
                trace,
                seed: Some(seed),
                evaluations,
            }
        }
    };

    Ok(ChannelSupremum { supremum, witness })
}
