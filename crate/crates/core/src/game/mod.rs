//! Payoff tables, expected payoffs over outcome distributions, and classical
//! (pre-quantum) equilibrium analysis of Battle of the Sexes.

mod equilibrium;

pub use equilibrium::{equilibria_on_unit_square, Equilibrium, EquilibriumReport};

use crate::error::{Error, Result};
use crate::tolerance;

/// The four joint measurement outcomes, ordered (00, 01, 10, 11) with the
/// first bit belonging to player 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    ZeroZero,
    ZeroOne,
    OneZero,
    OneOne,
}

impl Outcome {
    pub const ALL: [Outcome; 4] = [
        Outcome::ZeroZero,
        Outcome::ZeroOne,
        Outcome::OneZero,
        Outcome::OneOne,
    ];

    pub fn index(self) -> usize {
        match self {
            Outcome::ZeroZero => 0,
            Outcome::ZeroOne => 1,
            Outcome::OneZero => 2,
            Outcome::OneOne => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Outcome::ZeroZero => "00",
            Outcome::ZeroOne => "01",
            Outcome::OneZero => "10",
            Outcome::OneOne => "11",
        }
    }
}

/// Battle of the Sexes parameters: matched play at 00 pays (alpha, beta),
/// matched play at 11 pays (beta, alpha), any mismatch pays the common
/// mismatch payoff to both.
///
/// The ordering alpha > beta > gamma_mis is the default contract; equal
/// alpha and beta are admitted only through [`BosParams::with_tie_allowed`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BosParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma_mis: f64,
}

impl BosParams {
    /// Strict ordering alpha > beta > gamma_mis.
    pub fn new(alpha: f64, beta: f64, gamma_mis: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite() && gamma_mis.is_finite()) {
            return Err(Error::NonFinite);
        }
        if !(alpha > beta && beta > gamma_mis) {
            return Err(Error::PayoffOrdering { alpha, beta, gamma_mis });
        }
        Ok(Self { alpha, beta, gamma_mis })
    }

    /// Relaxes the contract to alpha >= beta > gamma_mis, covering the
    /// symmetric game where both matched outcomes pay the same.
    pub fn with_tie_allowed(alpha: f64, beta: f64, gamma_mis: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite() && gamma_mis.is_finite()) {
            return Err(Error::NonFinite);
        }
        if !(alpha >= beta && beta > gamma_mis) {
            return Err(Error::PayoffOrdering { alpha, beta, gamma_mis });
        }
        Ok(Self { alpha, beta, gamma_mis })
    }

    /// The stock instance (5, 3, 1) used by every numeric example.
    pub fn default_game() -> Self {
        Self { alpha: 5.0, beta: 3.0, gamma_mis: 1.0 }
    }
}

impl Default for BosParams {
    fn default() -> Self {
        Self::default_game()
    }
}

/// Map from the four outcomes to a (player 1, player 2) payoff pair.
#[derive(Debug, Clone, PartialEq)]
pub struct PayoffTable {
    entries: [(f64, f64); 4],
}

impl PayoffTable {
    /// Entries ordered (00, 01, 10, 11); payoffs must be finite.
    pub fn new(entries: [(f64, f64); 4]) -> Result<Self> {
        for (u1, u2) in &entries {
            if !u1.is_finite() || !u2.is_finite() {
                return Err(Error::NonFinite);
            }
        }
        Ok(Self { entries })
    }

    /// The Battle of the Sexes table:
    /// 00 -> (alpha, beta), 11 -> (beta, alpha), mismatches -> (gm, gm).
    pub fn from_bos(params: &BosParams) -> Self {
        let g = params.gamma_mis;
        Self {
            entries: [
                (params.alpha, params.beta),
                (g, g),
                (g, g),
                (params.beta, params.alpha),
            ],
        }
    }

    pub fn payoffs(&self, outcome: Outcome) -> (f64, f64) {
        self.entries[outcome.index()]
    }

    pub fn entries(&self) -> &[(f64, f64); 4] {
        &self.entries
    }

    /// Recovers BoS parameters when the table has the BoS shape, i.e.
    /// 00 = (a, b), 11 = (b, a), both mismatches equal and symmetric.
    pub fn as_bos(&self) -> Option<BosParams> {
        let [(a, b), (g1a, g1b), (g2a, g2b), (ba, ab)] = self.entries;
        let eq = |x: f64, y: f64| (x - y).abs() < 1e-12;
        if eq(ba, b) && eq(ab, a) && eq(g1a, g1b) && eq(g2a, g2b) && eq(g1a, g2a) {
            BosParams::with_tie_allowed(a, b, g1a).ok()
        } else {
            None
        }
    }

    /// Expected payoffs under an outcome distribution. The distribution must
    /// sum to 1 within [`tolerance::DISTRIBUTION_SUM`].
    pub fn expected(&self, dist: &[f64; 4]) -> Result<(f64, f64)> {
        let sum: f64 = dist.iter().sum();
        if !sum.is_finite() || (sum - 1.0).abs() > tolerance::DISTRIBUTION_SUM {
            return Err(Error::InvalidDistribution { sum, tol: tolerance::DISTRIBUTION_SUM });
        }
        Ok(self.expected_unchecked(dist))
    }

    /// Scoring for distributions produced by the exact pipelines, which are
    /// normalized by construction.
    pub(crate) fn expected_unchecked(&self, dist: &[f64; 4]) -> (f64, f64) {
        let mut e1 = 0.0;
        let mut e2 = 0.0;
        for (p, (u1, u2)) in dist.iter().zip(&self.entries) {
            e1 += p * u1;
            e2 += p * u2;
        }
        (e1, e2)
    }
}

/// Independent classical mixed strategies; `p1`/`p2` are each player's
/// probability of playing '1'.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalMixed {
    p1: f64,
    p2: f64,
}

impl ClassicalMixed {
    pub fn new(p1: f64, p2: f64) -> Result<Self> {
        for v in [p1, p2] {
            if !v.is_finite() || !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidProbability { value: v });
            }
        }
        Ok(Self { p1, p2 })
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }

    pub fn p2(&self) -> f64 {
        self.p2
    }
}

/// Expected payoffs when the players mix independently.
pub fn classical_expected(mixed: &ClassicalMixed, table: &PayoffTable) -> (f64, f64) {
    let (p, q) = (mixed.p1, mixed.p2);
    let dist = [
        (1.0 - p) * (1.0 - q),
        (1.0 - p) * q,
        p * (1.0 - q),
        p * q,
    ];
    table.expected_unchecked(&dist)
}

/// All epsilon-equilibria of the classical game over independent mixing,
/// by grid scan plus best-response bisection refinement.
pub fn classical_equilibria(
    table: &PayoffTable,
    grid_n: usize,
    eps: f64,
) -> Result<EquilibriumReport> {
    if grid_n < 101 {
        return Err(Error::GridTooCoarse { grid_n, min: 101 });
    }
    let payoff = |p: f64, q: f64| {
        classical_expected(&ClassicalMixed { p1: p, p2: q }, table)
    };
    Ok(equilibria_on_unit_square(payoff, grid_n, eps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn default_table() -> PayoffTable {
        PayoffTable::from_bos(&BosParams::default_game())
    }

    #[test]
    fn bos_table_structure() {
        let t = default_table();
        assert_eq!(t.payoffs(Outcome::ZeroZero), (5.0, 3.0));
        assert_eq!(t.payoffs(Outcome::OneOne), (3.0, 5.0));
        assert_eq!(t.payoffs(Outcome::ZeroOne), (1.0, 1.0));
        assert_eq!(t.payoffs(Outcome::OneZero), (1.0, 1.0));

        let t = PayoffTable::from_bos(&BosParams::new(2.0, 1.0, 0.0).unwrap());
        assert_eq!(t.entries(), &[(2.0, 1.0), (0.0, 0.0), (0.0, 0.0), (1.0, 2.0)]);
    }

    #[test]
    fn ordering_enforced_unless_tie_flagged() {
        assert!(matches!(
            BosParams::new(3.0, 3.0, 1.0),
            Err(Error::PayoffOrdering { .. })
        ));
        assert!(matches!(
            BosParams::new(3.0, 5.0, 1.0),
            Err(Error::PayoffOrdering { .. })
        ));
        let tied = BosParams::with_tie_allowed(3.0, 3.0, 1.0).unwrap();
        let t = PayoffTable::from_bos(&tied);
        assert_eq!(t.payoffs(Outcome::ZeroZero), (3.0, 3.0));
        assert_eq!(t.payoffs(Outcome::OneOne), (3.0, 3.0));
    }

    #[test]
    fn as_bos_round_trip_and_rejection() {
        let params = BosParams::default_game();
        let recovered = PayoffTable::from_bos(&params).as_bos().unwrap();
        assert_eq!(recovered, params);

        let custom = PayoffTable::new([(1.0, 2.0), (0.0, 0.5), (0.0, 0.0), (2.0, 1.0)]).unwrap();
        assert!(custom.as_bos().is_none());
    }

    #[test]
    fn expected_payoffs_examples() {
        let t = default_table();
        assert_eq!(t.expected(&[1.0, 0.0, 0.0, 0.0]).unwrap(), (5.0, 3.0));
        let (e1, e2) = t.expected(&[0.5, 0.0, 0.0, 0.5]).unwrap();
        assert!((e1 - 4.0).abs() < 1e-15 && (e2 - 4.0).abs() < 1e-15);
        let (e1, e2) = t.expected(&[0.25, 0.25, 0.25, 0.25]).unwrap();
        assert!((e1 - 2.5).abs() < 1e-15 && (e2 - 2.5).abs() < 1e-15);
    }

    #[test]
    fn expected_rejects_unnormalized_distribution() {
        let t = default_table();
        assert!(matches!(
            t.expected(&[0.5, 0.5, 0.5, 0.0]),
            Err(Error::InvalidDistribution { .. })
        ));
    }

    #[test]
    fn expected_is_linear_in_distribution() {
        let t = default_table();
        let d1 = [0.1, 0.2, 0.3, 0.4];
        let d2 = [0.4, 0.3, 0.2, 0.1];
        for lambda in [0.0, 0.25, 0.5, 0.9, 1.0] {
            let mut mix = [0.0; 4];
            for i in 0..4 {
                mix[i] = lambda * d1[i] + (1.0 - lambda) * d2[i];
            }
            let (m1, m2) = t.expected(&mix).unwrap();
            let (a1, a2) = t.expected(&d1).unwrap();
            let (b1, b2) = t.expected(&d2).unwrap();
            assert!((m1 - (lambda * a1 + (1.0 - lambda) * b1)).abs() < 1e-12);
            assert!((m2 - (lambda * a2 + (1.0 - lambda) * b2)).abs() < 1e-12);
        }
    }

    #[test]
    fn classical_expected_pure_profiles() {
        let t = default_table();
        let both_zero = ClassicalMixed::new(0.0, 0.0).unwrap();
        assert_eq!(classical_expected(&both_zero, &t), (5.0, 3.0));
        let mismatch = ClassicalMixed::new(1.0, 0.0).unwrap();
        assert_eq!(classical_expected(&mismatch, &t), (1.0, 1.0));
    }

    #[test]
    fn classical_expected_at_the_indifference_point() {
        // Oracle: solving the two indifference equations for the default
        // table gives p* = 1/3, q* = 2/3 and payoffs (7/3, 7/3).
        let t = default_table();
        let mixed = ClassicalMixed::new(1.0 / 3.0, 2.0 / 3.0).unwrap();
        let (e1, e2) = classical_expected(&mixed, &t);
        assert!((e1 - 7.0 / 3.0).abs() < 1e-12);
        assert!((e2 - 7.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn classical_mixed_rejects_out_of_range() {
        assert!(matches!(
            ClassicalMixed::new(-0.1, 0.5),
            Err(Error::InvalidProbability { .. })
        ));
        assert!(matches!(
            ClassicalMixed::new(0.5, 1.5),
            Err(Error::InvalidProbability { .. })
        ));
    }

    #[test]
    fn classical_equilibria_default_game() {
        // Oracle: the two-equation indifference system gives the interior
        // profile p* = (beta-gm)/(alpha+beta-2 gm) = 1/3 playing '1' for
        // player 1 (i.e. '0' with probability 2/3) and q* = 2/3, paying
        // 7/3 to each; verified against a brute-force grid in the test below.
        let t = default_table();
        let report = classical_equilibria(&t, 101, 1e-6).unwrap();
        assert_eq!(report.equilibria.len(), 3);
        let eq = &report.equilibria;
        assert!((eq[0].p, eq[0].q) == (0.0, 0.0));
        assert_eq!(eq[0].payoffs, (5.0, 3.0));
        assert!((eq[1].p - 1.0 / 3.0).abs() < 1e-9);
        assert!((eq[1].q - 2.0 / 3.0).abs() < 1e-9);
        assert!((eq[1].payoffs.0 - 7.0 / 3.0).abs() < 1e-9);
        assert!((eq[1].payoffs.1 - 7.0 / 3.0).abs() < 1e-9);
        assert!(eq[1].interior);
        assert!((eq[2].p, eq[2].q) == (1.0, 1.0));
        assert_eq!(eq[2].payoffs, (3.0, 5.0));
        assert!(!report.degenerate);
    }

    #[test]
    fn classical_equilibria_brute_force_cross_check() {
        // Brute-force oracle, independent of the finder: every reported
        // profile survives a 1001-point unilateral deviation scan, and the
        // three known equilibria are all present.
        let t = default_table();
        let report = classical_equilibria(&t, 101, 1e-6).unwrap();
        let payoff = |p: f64, q: f64| {
            classical_expected(&ClassicalMixed::new(p, q).unwrap(), &t)
        };
        for eq in &report.equilibria {
            let (e1, e2) = payoff(eq.p, eq.q);
            for k in 0..=1000 {
                let d = k as f64 / 1000.0;
                assert!(payoff(d, eq.q).0 <= e1 + 1e-6);
                assert!(payoff(eq.p, d).1 <= e2 + 1e-6);
            }
        }
    }

    #[test]
    fn classical_equilibria_grid_too_coarse() {
        let t = default_table();
        assert!(matches!(
            classical_equilibria(&t, 50, 1e-6),
            Err(Error::GridTooCoarse { .. })
        ));
    }

    #[test]
    fn degenerate_table_flagged() {
        let t = PayoffTable::new([(2.0, 2.0); 4]).unwrap();
        let report = classical_equilibria(&t, 101, 1e-6).unwrap();
        assert!(report.degenerate);
        // representatives only; every profile is an equilibrium
        assert!(!report.equilibria.is_empty());
        for eq in &report.equilibria {
            assert_eq!(eq.payoffs, (2.0, 2.0));
        }
    }

    #[test]
    fn pure_equilibria_dominate_interior_for_default_game() {
        let t = default_table();
        let report = classical_equilibria(&t, 101, 1e-6).unwrap();
        let interior: Vec<_> = report.equilibria.iter().filter(|e| e.interior).collect();
        let pure: Vec<_> = report.equilibria.iter().filter(|e| !e.interior).collect();
        assert_eq!(interior.len(), 1);
        assert_eq!(pure.len(), 2);
        for p in &pure {
            assert!(p.payoffs.0 > interior[0].payoffs.0);
            assert!(p.payoffs.1 > interior[0].payoffs.1);
        }
    }
}
