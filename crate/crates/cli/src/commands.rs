//! One function per subcommand; each returns the report document.

use anyhow::{bail, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use qbos_core::analysis::{
    channel_payoff_supremum, conjugate_response_check, dilemma_report, restricted_equilibria,
    unitary_payoff_supremum, ChannelSearchMode, DilemmaReport, SupremumResult,
};
use qbos_core::game::{classical_equilibria, classical_expected, ClassicalMixed};
use qbos_core::schemes::{
    eisert_play, mw_expected_payoffs, mw_final_density, mw_play, phi_plus_closed_form,
    scheme_bridge, RestrictedProfile, SchemeConfig, TacticProfile,
};
use qbos_core::{
    tolerance, EquilibriumReport, LocalChannel, LocalUnitary, PayoffTable, Seat, TwoQubitDensity,
    TwoQubitState,
};

use crate::report::{num, num_array, num_pair, object, Check, Report};

/// Shared run context: the resolved table, its config echo, the output
/// format, and the seed.
pub struct Ctx {
    pub table: PayoffTable,
    pub table_echo: Value,
    pub format: &'static str,
    pub seed: u64,
}

impl Ctx {
    fn config(&self, command: &str, parameters: Vec<(&str, Value)>) -> Value {
        object(vec![
            ("command", Value::from(command)),
            ("table", self.table_echo.clone()),
            ("format", Value::from(self.format)),
            ("seed", Value::from(self.seed)),
            (
                "tolerances",
                object(vec![
                    ("algebraic", num(tolerance::ALGEBRAIC)),
                    ("phase", num(tolerance::PHASE)),
                ]),
            ),
            ("parameters", object(parameters)),
        ])
    }
}

/// Initial strategy state selection, shared by the initial-state pipeline
/// commands.
#[derive(Debug, clap::Args)]
pub struct InitialArgs {
    /// Initial strategy state handed to the players
    #[arg(long, value_enum, default_value_t = InitialState::PhiPlus)]
    pub initial: InitialState,

    /// Entangling angle in radians, used by --initial entangled
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
    pub gamma_e: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InitialState {
    /// (|00> + |11>)/sqrt(2), real amplitudes
    PhiPlus,
    /// The product state |00>
    Zero,
    /// J(gamma_e)|00>, the gate-prepared entangled state
    Entangled,
}

impl InitialArgs {
    pub fn resolve(&self) -> Result<TwoQubitState> {
        Ok(match self.initial {
            InitialState::PhiPlus => TwoQubitState::phi_plus(),
            InitialState::Zero => TwoQubitState::basis(0, 0),
            InitialState::Entangled => {
                SchemeConfig::eisert(self.gamma_e)?.pre_tactic_state()
            }
        })
    }

    fn echo(&self) -> Vec<(&'static str, Value)> {
        let label = match self.initial {
            InitialState::PhiPlus => "phi-plus",
            InitialState::Zero => "zero",
            InitialState::Entangled => "entangled",
        };
        vec![("initial", Value::from(label)), ("gamma_e", num(self.gamma_e))]
    }

    fn is_phi_plus(&self) -> bool {
        self.initial == InitialState::PhiPlus
    }
}

/// Euler angles of both players' unitary tactics.
#[derive(Debug, clap::Args)]
pub struct TacticArgs {
    /// Player 1 rotation angle theta (radians)
    #[arg(long, default_value_t = 0.0)]
    pub a_theta: f64,
    /// Player 1 phase phi (radians)
    #[arg(long, default_value_t = 0.0)]
    pub a_phi: f64,
    /// Player 1 phase lambda (radians)
    #[arg(long, default_value_t = 0.0)]
    pub a_lam: f64,
    /// Player 2 rotation angle theta (radians)
    #[arg(long, default_value_t = 0.0)]
    pub b_theta: f64,
    /// Player 2 phase phi (radians)
    #[arg(long, default_value_t = 0.0)]
    pub b_phi: f64,
    /// Player 2 phase lambda (radians)
    #[arg(long, default_value_t = 0.0)]
    pub b_lam: f64,
}

impl TacticArgs {
    fn resolve(&self) -> Result<(LocalUnitary, LocalUnitary)> {
        Ok((
            LocalUnitary::su2(self.a_theta, self.a_phi, self.a_lam)?,
            LocalUnitary::su2(self.b_theta, self.b_phi, self.b_lam)?,
        ))
    }

    fn echo(&self) -> Vec<(&'static str, Value)> {
        vec![
            ("a_angles", num_array(&[self.a_theta, self.a_phi, self.a_lam])),
            ("b_angles", num_array(&[self.b_theta, self.b_phi, self.b_lam])),
        ]
    }
}

fn equilibria_value(report: &EquilibriumReport, p_key: &str, q_key: &str) -> Value {
    let rows: Vec<Value> = report
        .equilibria
        .iter()
        .map(|eq| {
            object(vec![
                (p_key, num(eq.p)),
                (q_key, num(eq.q)),
                ("payoffs", num_pair(eq.payoffs)),
                ("slack", num(eq.slack)),
                ("interior", Value::from(eq.interior)),
            ])
        })
        .collect();
    object(vec![
        ("equilibria", Value::Array(rows)),
        ("count", Value::from(report.equilibria.len())),
        ("grid_n", Value::from(report.grid_n)),
        ("eps", num(report.eps)),
        ("degenerate", Value::from(report.degenerate)),
    ])
}

fn dilemma_value(dilemma: &DilemmaReport) -> Value {
    object(vec![
        ("profile_distinct", Value::from(dilemma.profile_distinct)),
        ("payoff_distinct", Value::from(dilemma.payoff_distinct)),
        (
            "payoffs",
            Value::Array(dilemma.payoffs.iter().map(|p| num_pair(*p)).collect()),
        ),
        ("all_payoffs_equal", Value::from(dilemma.all_payoffs_equal)),
        ("unique_solution", Value::from(dilemma.unique_solution)),
    ])
}

/// Largest unilateral-deviation gain any reported equilibrium shows on a
/// 1001-point re-check of the given payoff function.
fn reverify_gain(report: &EquilibriumReport, payoff: impl Fn(f64, f64) -> (f64, f64)) -> f64 {
    let mut worst = 0.0f64;
    for eq in &report.equilibria {
        let (e1, e2) = payoff(eq.p, eq.q);
        for k in 0..=1000 {
            let d = k as f64 / 1000.0;
            worst = worst.max(payoff(d, eq.q).0 - e1);
            worst = worst.max(payoff(eq.p, d).1 - e2);
        }
    }
    worst
}

fn supremum_value(result: &SupremumResult) -> Value {
    let trace: Vec<Value> = result
        .trace
        .iter()
        .map(|(i, v)| Value::Array(vec![Value::from(*i), num(*v)]))
        .collect();
    object(vec![
        ("best_value", num(result.best_value)),
        ("best_angles", num_array(&result.best_params)),
        ("evaluations", Value::from(result.evaluations)),
        ("trace", Value::Array(trace)),
        (
            "seed",
            result.seed.map_or(Value::Null, Value::from),
        ),
    ])
}

/// Monte-Carlo outcome sampler, for demonstration only; payoffs elsewhere in
/// the report stay expectation-exact.
fn sample_outcomes(dist: &[f64; 4], shots: u64, seed: u64) -> Value {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = [0u64; 4];
    for _ in 0..shots {
        let r: f64 = rng.gen_range(0.0..1.0);
        let mut acc = 0.0;
        let mut index = 3;
        for (i, p) in dist.iter().enumerate() {
            acc += p;
            if r < acc {
                index = i;
                break;
            }
        }
        counts[index] += 1;
    }
    let frequencies: Vec<f64> = counts.iter().map(|c| *c as f64 / shots as f64).collect();
    object(vec![
        (
            "note",
            Value::from("sampled demonstration only; reported payoffs are exact expectations"),
        ),
        ("shots", Value::from(shots)),
        ("seed", Value::from(seed)),
        ("counts", Value::Array(counts.iter().map(|c| Value::from(*c)).collect())),
        ("frequencies", num_array(&frequencies)),
    ])
}

pub fn classical_eq(ctx: &Ctx, grid: usize, eps: f64) -> Result<Report> {
    let report = classical_equilibria(&ctx.table, grid, eps)?;
    let dilemma = dilemma_report(&report, tolerance::PHASE)?;

    let gain = reverify_gain(&report, |p, q| {
        classical_expected(&ClassicalMixed::new(p, q).expect("grid stays in range"), &ctx.table)
    });
    let checks = vec![Check::at_most("equilibria_reverify_gain", gain, eps)];

    Ok(Report {
        config: ctx.config(
            "classical-eq",
            vec![("grid", Value::from(grid)), ("eps", num(eps))],
        ),
        results: object(vec![
            ("classical", equilibria_value(&report, "p1", "p2")),
            ("dilemma", dilemma_value(&dilemma)),
        ]),
        checks,
    })
}

pub fn mw_payoff(
    ctx: &Ctx,
    p: f64,
    q: f64,
    initial_args: &InitialArgs,
    shots: Option<u64>,
) -> Result<Report> {
    let profile = RestrictedProfile::new(p, q)?;
    let initial = initial_args.resolve()?;
    let rho = mw_final_density(&initial, &profile);
    let dist = rho.outcome_distribution();
    let payoffs = ctx.table.expected(&dist)?;

    // Cross-check 1: the restricted play is the flip-probability-weighted
    // average of the four pure identity/flip plays.
    let id = LocalUnitary::identity();
    let x = LocalUnitary::sigma_x();
    let pure: Vec<(f64, f64)> = [
        (id.clone(), id.clone()),
        (id.clone(), x.clone()),
        (x.clone(), id),
        (x.clone(), x),
    ]
    .into_iter()
    .map(|(a, b)| mw_play(&initial, &TacticProfile::Unitary(a, b), &ctx.table).payoffs)
    .collect();
    let weights = [(1.0 - p) * (1.0 - q), (1.0 - p) * q, p * (1.0 - q), p * q];
    let mixture: (f64, f64) = pure.iter().zip(&weights).fold((0.0, 0.0), |acc, (e, w)| {
        (acc.0 + w * e.0, acc.1 + w * e.1)
    });
    let mixture_err = (payoffs.0 - mixture.0).abs().max((payoffs.1 - mixture.1).abs());
    let mut checks = vec![Check::at_most("mixture_consistency", mixture_err, 1e-12)];

    // Cross-check 2: the matched-weight closed form, on the maximally
    // entangled strategy with a BoS-shaped table.
    let mut closed_form = Value::Null;
    if initial_args.is_phi_plus() {
        if let Some(params) = ctx.table.as_bos() {
            let cf = phi_plus_closed_form(&profile, &params);
            let err = (payoffs.0 - cf.0).abs().max((payoffs.1 - cf.1).abs());
            checks.push(Check::at_most("closed_form_matches", err, 1e-12));
            let m = (1.0 - p) * (1.0 - q) + p * q;
            closed_form = object(vec![
                ("matched_weight", num(m)),
                ("payoffs", num_pair(cf)),
            ]);
        }
    }

    let mut results = vec![
        ("distribution", num_array(&dist)),
        ("payoffs", num_pair(payoffs)),
        ("closed_form", closed_form),
    ];
    let sampled = shots.map(|n| sample_outcomes(&dist, n, ctx.seed));
    if let Some(sampled) = sampled {
        results.push(("monte_carlo", sampled));
    }

    let mut parameters = vec![("p", num(p)), ("q", num(q))];
    parameters.extend(initial_args.echo());
    if let Some(n) = shots {
        parameters.push(("shots", Value::from(n)));
    }

    Ok(Report {
        config: ctx.config("mw-payoff", parameters),
        results: object(results),
        checks,
    })
}

pub fn mw_eq(ctx: &Ctx, initial_args: &InitialArgs, grid: usize, eps: f64) -> Result<Report> {
    let initial = initial_args.resolve()?;
    let report = restricted_equilibria(&initial, &ctx.table, grid, eps)?;
    let dilemma = dilemma_report(&report, tolerance::PHASE)?;

    let gain = reverify_gain(&report, |p, q| {
        mw_expected_payoffs(
            &initial,
            &RestrictedProfile::new(p, q).expect("grid stays in range"),
            &ctx.table,
        )
    });
    let checks = vec![Check::at_most("equilibria_reverify_gain", gain, eps)];

    let mut parameters = vec![("grid", Value::from(grid)), ("eps", num(eps))];
    parameters.extend(initial_args.echo());

    Ok(Report {
        config: ctx.config("mw-eq", parameters),
        results: object(vec![
            ("restricted", equilibria_value(&report, "p", "q")),
            ("dilemma", dilemma_value(&dilemma)),
        ]),
        checks,
    })
}

pub fn eisert(
    ctx: &Ctx,
    gamma_e: f64,
    tactics: &TacticArgs,
    shots: Option<u64>,
) -> Result<Report> {
    let (a, b) = tactics.resolve()?;
    let out = eisert_play(gamma_e, &a, &b, &ctx.table)?;
    let sum: f64 = out.dist.iter().sum();
    let checks = vec![Check::at_most(
        "distribution_normalized",
        (sum - 1.0).abs(),
        tolerance::ALGEBRAIC,
    )];

    let mut results = vec![
        ("distribution", num_array(&out.dist)),
        ("payoffs", num_pair(out.payoffs)),
    ];
    if let Some(n) = shots {
        results.push(("monte_carlo", sample_outcomes(&out.dist, n, ctx.seed)));
    }

    let mut parameters = vec![("gamma_e", num(gamma_e))];
    parameters.extend(tactics.echo());
    if let Some(n) = shots {
        parameters.push(("shots", Value::from(n)));
    }

    Ok(Report {
        config: ctx.config("eisert", parameters),
        results: object(results),
        checks,
    })
}

pub fn bridge(ctx: &Ctx, gamma_e: f64, tactics: &TacticArgs) -> Result<Report> {
    let (a, b) = tactics.resolve()?;
    let cmp = scheme_bridge(gamma_e, &a, &b, &ctx.table)?;
    let checks = vec![Check::at_most(
        "mw_matches_eisert_without_inverse",
        cmp.tv_mw_vs_no_inverse,
        tolerance::ALGEBRAIC,
    )];

    let mut parameters = vec![("gamma_e", num(gamma_e))];
    parameters.extend(tactics.echo());

    Ok(Report {
        config: ctx.config("bridge", parameters),
        results: object(vec![
            ("mw_dist", num_array(&cmp.mw_dist)),
            ("eisert_dist", num_array(&cmp.eisert_dist)),
            ("eisert_no_inverse_dist", num_array(&cmp.eisert_no_inverse_dist)),
            ("tv_mw_vs_eisert", num(cmp.tv_mw_vs_eisert)),
            ("tv_mw_vs_no_inverse", num(cmp.tv_mw_vs_no_inverse)),
            ("tv_eisert_vs_no_inverse", num(cmp.tv_eisert_vs_no_inverse)),
        ]),
        checks,
    })
}

pub fn conjugate_check(ctx: &Ctx, samples: usize, tol: f64) -> Result<Report> {
    let check = conjugate_response_check(samples, ctx.seed, tol)?;
    let checks = vec![Check::at_least(
        "conjugate_response_overlap",
        check.min_overlap,
        1.0 - tol,
    )];

    Ok(Report {
        config: ctx.config(
            "conjugate-check",
            vec![("samples", Value::from(samples)), ("tol", num(tol))],
        ),
        results: object(vec![
            ("min_overlap", num(check.min_overlap)),
            ("pass", Value::from(check.pass)),
        ]),
        checks,
    })
}

pub fn unitary_max(
    ctx: &Ctx,
    initial_args: &InitialArgs,
    restarts: usize,
    iters: usize,
) -> Result<Report> {
    let initial = initial_args.resolve()?;
    let result = unitary_payoff_supremum(&ctx.table, &initial, restarts, iters, ctx.seed)?;

    let replay = mw_play(&initial, &result.best_profile, &ctx.table).payoffs.0;
    let mut checks = vec![Check::at_most(
        "best_reproducible",
        (replay - result.best_value).abs(),
        1e-9,
    )];
    if initial_args.is_phi_plus() {
        if let Some(params) = ctx.table.as_bos() {
            let bound = (params.alpha + params.beta) / 2.0;
            checks.push(Check::at_most("entangled_bound", result.best_value, bound + 1e-9));
            checks.push(Check::close("supremum_matches_average", result.best_value, bound, 1e-3));
        }
    }

    let mut parameters = vec![
        ("restarts", Value::from(restarts)),
        ("iters", Value::from(iters)),
    ];
    parameters.extend(initial_args.echo());

    Ok(Report {
        config: ctx.config("unitary-max", parameters),
        results: object(vec![("supremum", supremum_value(&result))]),
        checks,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ChannelMode {
    /// Explicit identity / measure-and-set profiles only
    Demo,
    /// Optimize over the rank-two Kraus family as well
    Search,
}

pub fn channel_max(
    ctx: &Ctx,
    initial_args: &InitialArgs,
    mode: ChannelMode,
    restarts: usize,
    iters: usize,
) -> Result<Report> {
    let initial = initial_args.resolve()?;
    let search_mode = match mode {
        ChannelMode::Demo => ChannelSearchMode::Demo,
        ChannelMode::Search => {
            ChannelSearchMode::Search { restarts, iters, seed: ctx.seed }
        }
    };
    let out = channel_payoff_supremum(&ctx.table, &initial, search_mode)?;

    let replay = mw_play(&initial, &out.supremum.best_profile, &ctx.table).payoffs.0;
    let mut checks = vec![Check::at_most(
        "best_reproducible",
        (replay - out.supremum.best_value).abs(),
        1e-9,
    )];
    if initial_args.is_phi_plus() {
        if let Some(params) = ctx.table.as_bos() {
            let tol = match mode {
                ChannelMode::Demo => 1e-9,
                ChannelMode::Search => 1e-3,
            };
            checks.push(Check::close(
                "reaches_alpha",
                out.supremum.best_value,
                params.alpha,
                tol,
            ));
        }
    }
    if out.witness.before > 1e-6 {
        checks.push(Check::at_most(
            "witness_after_player1",
            out.witness.after_player1,
            tolerance::ALGEBRAIC,
        ));
        checks.push(Check::at_most(
            "witness_after_player2",
            out.witness.after_player2,
            tolerance::ALGEBRAIC,
        ));
    }

    let mode_label = match mode {
        ChannelMode::Demo => "demo",
        ChannelMode::Search => "search",
    };
    let mut parameters = vec![
        ("mode", Value::from(mode_label)),
        ("restarts", Value::from(restarts)),
        ("iters", Value::from(iters)),
    ];
    parameters.extend(initial_args.echo());

    Ok(Report {
        config: ctx.config("channel-max", parameters),
        results: object(vec![
            ("supremum", supremum_value(&out.supremum)),
            (
                "witness",
                object(vec![
                    ("before", num(out.witness.before)),
                    ("after_player1", num(out.witness.after_player1)),
                    ("after_player2", num(out.witness.after_player2)),
                ]),
            ),
        ]),
        checks,
    })
}

pub fn suite(
    ctx: &Ctx,
    grid: usize,
    eps: f64,
    restarts: usize,
    iters: usize,
    samples: usize,
) -> Result<Report> {
    let Some(params) = ctx.table.as_bos() else {
        bail!(
            "the suite needs a Battle of the Sexes shaped table \
             (00=(a,b), 11=(b,a), symmetric mismatches)"
        );
    };
    let phi = TwoQubitState::phi_plus();
    let average = (params.alpha + params.beta) / 2.0;
    let mut checks = Vec::new();
    let mut results = Vec::new();

    // 1. Pure restricted equilibria at (0,0) and (1,1), both paying the
    //    average to each player.
    let restricted = restricted_equilibria(&phi, &ctx.table, grid, eps)?;
    let mut pure_err = 0.0f64;
    for target in [(0.0, 0.0), (1.0, 1.0)] {
        let found = restricted
            .equilibria
            .iter()
            .find(|e| (e.p - target.0).abs() < 1e-9 && (e.q - target.1).abs() < 1e-9);
        pure_err = match found {
            Some(eq) => pure_err
                .max((eq.payoffs.0 - average).abs())
                .max((eq.payoffs.1 - average).abs()),
            None => f64::INFINITY,
        };
    }
    checks.push(Check::at_most("restricted_pure_equilibria", pure_err, 1e-9));
    results.push(("restricted", equilibria_value(&restricted, "p", "q")));

    // 2. The quantum game still has no unique solution, but the pure
    //    solutions pay alike.
    let dilemma = dilemma_report(&restricted, tolerance::PHASE)?;
    checks.push(Check::flag("no_unique_solution", !dilemma.unique_solution));
    checks.push(Check::flag("pure_payoffs_equal", dilemma.all_payoffs_equal));
    results.push(("dilemma", dilemma_value(&dilemma)));

    // 3. Mismatched tactics pay the mismatch payoff, the grid minimum.
    let mut mismatch_err = 0.0f64;
    for (p, q) in [(0.0, 1.0), (1.0, 0.0)] {
        let e = mw_expected_payoffs(&phi, &RestrictedProfile::new(p, q)?, &ctx.table);
        mismatch_err = mismatch_err
            .max((e.0 - params.gamma_mis).abs())
            .max((e.1 - params.gamma_mis).abs());
    }
    checks.push(Check::at_most("worst_case_mismatch", mismatch_err, tolerance::ALGEBRAIC));
    let mismatch = mw_expected_payoffs(&phi, &RestrictedProfile::new(0.0, 1.0)?, &ctx.table);
    let mut grid_min = f64::INFINITY;
    for i in 0..grid {
        for j in 0..grid {
            let p = i as f64 / (grid - 1) as f64;
            let q = j as f64 / (grid - 1) as f64;
            let e = mw_expected_payoffs(&phi, &RestrictedProfile::new(p, q)?, &ctx.table);
            grid_min = grid_min.min(e.0);
        }
    }
    checks.push(Check::at_least(
        "mismatch_is_grid_minimum",
        grid_min,
        mismatch.0 - tolerance::ALGEBRAIC,
    ));

    // 4. Classical contrast: pure equilibria favoring different players,
    //    interior equilibrium at the indifference point.
    let classical = classical_equilibria(&ctx.table, grid, eps)?;
    let pure: Vec<_> = classical.pure().collect();
    let mut classical_err = f64::INFINITY;
    if pure.len() == 2 {
        classical_err = (pure[0].payoffs.0 - params.alpha)
            .abs()
            .max((pure[0].payoffs.1 - params.beta).abs())
            .max((pure[1].payoffs.0 - params.beta).abs())
            .max((pure[1].payoffs.1 - params.alpha).abs());
    }
    checks.push(Check::at_most("classical_pure_payoffs", classical_err, 1e-9));
    let denom = params.alpha + params.beta - 2.0 * params.gamma_mis;
    let p_star = (params.beta - params.gamma_mis) / denom;
    let q_star = (params.alpha - params.gamma_mis) / denom;
    let interior_err = classical
        .equilibria
        .iter()
        .find(|e| e.interior)
        .map_or(f64::INFINITY, |e| (e.p - p_star).abs().max((e.q - q_star).abs()));
    checks.push(Check::at_most("classical_interior_equilibrium", interior_err, 1e-6));
    results.push(("classical", equilibria_value(&classical, "p1", "p2")));

    // 5. Conjugate response.
    let conjugate = conjugate_response_check(samples, ctx.seed, tolerance::PHASE)?;
    checks.push(Check::at_least(
        "conjugate_response_overlap",
        conjugate.min_overlap,
        1.0 - tolerance::PHASE,
    ));
    results.push(("conjugate_min_overlap", num(conjugate.min_overlap)));

    // 6. Unitary supremum stays at the average payoff.
    let unitary = unitary_payoff_supremum(&ctx.table, &phi, restarts, iters, ctx.seed)?;
    checks.push(Check::close("unitary_supremum", unitary.best_value, average, 1e-3));
    checks.push(Check::at_most("unitary_bound", unitary.best_value, average + 1e-9));
    results.push(("unitary_supremum", num(unitary.best_value)));

    // 7. Channel escalation to alpha with a destroyed-entanglement witness.
    let channel = channel_payoff_supremum(&ctx.table, &phi, ChannelSearchMode::Demo)?;
    checks.push(Check::close(
        "channel_demo_alpha",
        channel.supremum.best_value,
        params.alpha,
        1e-9,
    ));
    checks.push(Check::close("witness_before", channel.witness.before, 0.5, tolerance::ALGEBRAIC));
    checks.push(Check::at_most(
        "witness_after",
        channel.witness.after_player1.max(channel.witness.after_player2),
        tolerance::ALGEBRAIC,
    ));
    results.push((
        "channel",
        object(vec![
            ("best_value", num(channel.supremum.best_value)),
            ("witness_before", num(channel.witness.before)),
            (
                "witness_after",
                num(channel.witness.after_player1.max(channel.witness.after_player2)),
            ),
        ]),
    ));

    // 8. Scheme bridge on 100 random tactic pairs.
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut max_no_inverse_gap = 0.0f64;
    let mut max_full_gap = 0.0f64;
    for _ in 0..100 {
        let a = LocalUnitary::random_su2(&mut rng);
        let b = LocalUnitary::random_su2(&mut rng);
        let cmp = scheme_bridge(std::f64::consts::FRAC_PI_2, &a, &b, &ctx.table)?;
        max_no_inverse_gap = max_no_inverse_gap.max(cmp.tv_mw_vs_no_inverse);
        max_full_gap = max_full_gap.max(cmp.tv_mw_vs_eisert);
    }
    checks.push(Check::at_most(
        "bridge_no_inverse_match",
        max_no_inverse_gap,
        tolerance::ALGEBRAIC,
    ));
    checks.push(Check::at_least("bridge_inverse_gate_gap", max_full_gap, 0.1));
    results.push((
        "bridge",
        object(vec![
            ("max_no_inverse_gap", num(max_no_inverse_gap)),
            ("max_full_gap", num(max_full_gap)),
        ]),
    ));

    // 9. Structural invariants over randomized cases.
    let violation = structural_invariants_violation(&ctx.table, ctx.seed, samples);
    checks.push(Check::at_most("structural_invariants", violation, tolerance::ALGEBRAIC));
    results.push(("structural_max_violation", num(violation)));

    Ok(Report {
        config: ctx.config(
            "suite",
            vec![
                ("grid", Value::from(grid)),
                ("eps", num(eps)),
                ("restarts", Value::from(restarts)),
                ("iters", Value::from(iters)),
                ("samples", Value::from(samples)),
            ],
        ),
        results: object(results),
        checks,
    })
}

/// Largest deviation from any structural invariant over `cases` randomized
/// draws: norm/trace preservation, channel completeness, disjoint-seat
/// commutation, marginal uniformity, payoff linearity.
fn structural_invariants_violation(table: &PayoffTable, seed: u64, cases: usize) -> f64 {
    use std::f64::consts::{FRAC_PI_2, PI};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;

    let random_channel = |rng: &mut ChaCha8Rng| -> LocalChannel {
        let angles = [
            rng.gen_range(0.0..FRAC_PI_2),
            rng.gen_range(0.0..FRAC_PI_2),
            rng.gen_range(-PI..PI),
            rng.gen_range(0.0..PI),
            rng.gen_range(-PI..PI),
            rng.gen_range(-PI..PI),
        ];
        LocalChannel::rank_two(&angles).expect("trace preserving")
    };
    let random_density = |rng: &mut ChaCha8Rng| -> TwoQubitDensity {
        let a = TwoQubitState::random_haar(rng);
        let b = TwoQubitState::random_haar(rng);
        let w = rng.gen_range(0.0..1.0);
        TwoQubitDensity::mixture(&[(w, a), (1.0 - w, b)]).expect("weights normalized")
    };

    for _ in 0..cases {
        // norm and trace preservation
        let state = TwoQubitState::random_haar(&mut rng);
        let u = LocalUnitary::random_su2(&mut rng);
        let seat = if rng.gen_bool(0.5) { Seat::Player1 } else { Seat::Player2 };
        worst = worst.max((state.apply_local_unitary(&u, seat).norm() - 1.0).abs());
        let rho = random_density(&mut rng);
        let ch = random_channel(&mut rng);
        let after = rho.apply_channel(&ch, seat);
        worst = worst.max((after.trace() - 1.0).abs());
        if after.check_invariants().is_err() {
            worst = worst.max(1.0);
        }

        // channel completeness
        worst = worst.max(ch.completeness_error());

        // disjoint-seat commutation
        let x = random_channel(&mut rng);
        let y = random_channel(&mut rng);
        let xy = rho.apply_channel(&x, Seat::Player1).apply_channel(&y, Seat::Player2);
        let yx = rho.apply_channel(&y, Seat::Player2).apply_channel(&x, Seat::Player1);
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((xy.element(i, j) - yx.element(i, j)).norm());
            }
        }

        // marginal uniformity on the maximally entangled strategy
        let a = LocalUnitary::random_su2(&mut rng);
        let b = LocalUnitary::random_su2(&mut rng);
        let d = TwoQubitState::phi_plus()
            .apply_local_unitary(&a, Seat::Player1)
            .apply_local_unitary(&b, Seat::Player2)
            .outcome_distribution();
        worst = worst
            .max((d[0] + d[1] - 0.5).abs())
            .max((d[2] + d[3] - 0.5).abs())
            .max((d[0] + d[2] - 0.5).abs())
            .max((d[1] + d[3] - 0.5).abs());

        // payoff linearity
        let d1 = TwoQubitState::random_haar(&mut rng).outcome_distribution();
        let d2 = TwoQubitState::random_haar(&mut rng).outcome_distribution();
        let lambda: f64 = rng.gen_range(0.0..=1.0);
        let mut mix = [0.0; 4];
        for i in 0..4 {
            mix[i] = lambda * d1[i] + (1.0 - lambda) * d2[i];
        }
        let (m1, m2) = table.expected(&mix).expect("normalized");
        let (a1, a2) = table.expected(&d1).expect("normalized");
        let (b1, b2) = table.expected(&d2).expect("normalized");
        worst = worst
            .max((m1 - (lambda * a1 + (1.0 - lambda) * b1)).abs())
            .max((m2 - (lambda * a2 + (1.0 - lambda) * b2)).abs());
    }
    worst
}
