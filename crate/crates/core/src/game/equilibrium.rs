//! Epsilon-equilibrium search for two-player games over the unit square.
//!
//! The payoff function maps a profile (p, q) in [0,1]^2 to the pair of
//! expected payoffs. The search runs a coarse grid scan with a slack wide
//! enough not to miss any equilibrium of a payoff function with bounded
//! slope, clusters the surviving grid points, refines each cluster with the
//! best-response conditions (bisection on the two indifference gaps), and
//! keeps only profiles that survive a dense unilateral-deviation check at
//! the requested epsilon.

/// One verified epsilon-equilibrium.
#[derive(Debug, Clone, PartialEq)]
pub struct Equilibrium {
    /// Player 1's mixing weight (probability of her '1'-flavored action).
    pub p: f64,
    /// Player 2's mixing weight.
    pub q: f64,
    /// Expected payoffs at the profile.
    pub payoffs: (f64, f64),
    /// Largest unilateral-deviation gain observed during verification.
    pub slack: f64,
    /// True when the profile mixes, i.e. is not a corner of the square.
    /// Interior equilibria go beyond the pure solutions usually discussed.
    pub interior: bool,
}

/// The full search result.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumReport {
    /// Verified equilibria, sorted lexicographically by (p, q).
    pub equilibria: Vec<Equilibrium>,
    pub grid_n: usize,
    pub eps: f64,
    /// Set when both players' payoffs are constant to within eps over the
    /// whole square, so every profile qualifies; only the four corners are
    /// listed as representatives.
    pub degenerate: bool,
}

impl EquilibriumReport {
    /// Equilibria at corners of the square (pure profiles).
    pub fn pure(&self) -> impl Iterator<Item = &Equilibrium> {
        self.equilibria.iter().filter(|e| !e.interior)
    }
}

const PROFILE_TOL: f64 = 1e-9;
/// Deviations are re-checked on this many points per axis (inclusive).
const DENSE_CHECK_POINTS: usize = 1000;

pub fn equilibria_on_unit_square<F>(payoff: F, grid_n: usize, eps: f64) -> EquilibriumReport
where
    F: Fn(f64, f64) -> (f64, f64),
{
    let n = grid_n.max(2);
    let grid = |i: usize| i as f64 / (n - 1) as f64;
    let h = 1.0 / (n - 1) as f64;

    let mut e1 = vec![vec![0.0f64; n]; n];
    let mut e2 = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (a, b) = payoff(grid(i), grid(j));
            e1[i][j] = a;
            e2[i][j] = b;
        }
    }

    let mut col_max1 = vec![f64::NEG_INFINITY; n];
    let mut row_max2 = vec![f64::NEG_INFINITY; n];
    for i in 0..n {
        for j in 0..n {
            col_max1[j] = col_max1[j].max(e1[i][j]);
            row_max2[i] = row_max2[i].max(e2[i][j]);
        }
    }

    let range = |table: &Vec<Vec<f64>>| {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for row in table {
            for &v in row {
                lo = lo.min(v);
                hi = hi.max(v);
            }
        }
        hi - lo
    };
    let r1 = range(&e1);
    let r2 = range(&e2);

    // Constant payoffs for both players: any profile is an eps-equilibrium.
    if r1 <= eps && r2 <= eps {
        let mut equilibria = Vec::new();
        for (p, q) in [(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)] {
            if let Some(eq) = verify_profile(&payoff, p, q, eps) {
                equilibria.push(eq);
            }
        }
        return EquilibriumReport { equilibria, grid_n: n, eps, degenerate: true };
    }

    // Coarse scan. A profile within h/2 of a true equilibrium can show a
    // deviation gain of at most ~4.5*R*h for payoffs with slope bounded by
    // 3R on the square (true for the bilinear payoffs of independent-mixing
    // games); 6*R*h leaves margin.
    let coarse_slack = eps + 6.0 * r1.max(r2) * h;
    let mut candidate = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            candidate[i][j] = col_max1[j] - e1[i][j] <= coarse_slack
                && row_max2[i] - e2[i][j] <= coarse_slack;
        }
    }

    let clusters = cluster_bounding_boxes(&candidate, n);

    // Best-response conditions. Player 1 mixes only where d1(q) = 0, sits at
    // p = 0 where d1 < 0 and at p = 1 where d1 > 0; symmetrically for
    // player 2 via d2(p).
    let d1 = |q: f64| payoff(1.0, q).0 - payoff(0.0, q).0;
    let d2 = |p: f64| payoff(p, 1.0).1 - payoff(p, 0.0).1;
    let mut p_candidates = vec![0.0, 1.0];
    p_candidates.extend(roots_on_unit_interval(&d2));
    let mut q_candidates = vec![0.0, 1.0];
    q_candidates.extend(roots_on_unit_interval(&d1));

    let mut equilibria: Vec<Equilibrium> = Vec::new();
    for (ilo, ihi, jlo, jhi) in clusters {
        let p_window = (grid(ilo) - 2.0 * h, grid(ihi) + 2.0 * h);
        let q_window = (grid(jlo) - 2.0 * h, grid(jhi) + 2.0 * h);
        for &p in p_candidates.iter().filter(|p| p_window.0 <= **p && **p <= p_window.1) {
            for &q in q_candidates.iter().filter(|q| q_window.0 <= **q && **q <= q_window.1) {
                if equilibria
                    .iter()
                    .any(|e| (e.p - p).abs() < PROFILE_TOL && (e.q - q).abs() < PROFILE_TOL)
                {
                    continue;
                }
                if let Some(eq) = verify_profile(&payoff, p, q, eps) {
                    equilibria.push(eq);
                }
            }
        }
    }

    equilibria.sort_by(|a, b| (a.p, a.q).partial_cmp(&(b.p, b.q)).unwrap());
    EquilibriumReport { equilibria, grid_n: n, eps, degenerate: false }
}

/// Dense unilateral-deviation check; returns the verified equilibrium or
/// None if either player can gain more than eps somewhere on a 1001-point
/// deviation grid.
fn verify_profile<F>(payoff: &F, p: f64, q: f64, eps: f64) -> Option<Equilibrium>
where
    F: Fn(f64, f64) -> (f64, f64),
{
    let (e1, e2) = payoff(p, q);
    let mut worst = 0.0f64;
    for k in 0..=DENSE_CHECK_POINTS {
        let d = k as f64 / DENSE_CHECK_POINTS as f64;
        worst = worst.max(payoff(d, q).0 - e1);
        worst = worst.max(payoff(p, d).1 - e2);
        if worst > eps {
            return None;
        }
    }
    let on_corner = |v: f64| v.abs() < PROFILE_TOL || (v - 1.0).abs() < PROFILE_TOL;
    Some(Equilibrium {
        p,
        q,
        payoffs: (e1, e2),
        slack: worst,
        interior: !(on_corner(p) && on_corner(q)),
    })
}

/// Bounding boxes (ilo, ihi, jlo, jhi) of 8-connected candidate clusters.
fn cluster_bounding_boxes(candidate: &[Vec<bool>], n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut seen = vec![vec![false; n]; n];
    let mut boxes = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !candidate[i][j] || seen[i][j] {
                continue;
            }
            let (mut ilo, mut ihi, mut jlo, mut jhi) = (i, i, j, j);
            let mut stack = vec![(i, j)];
            seen[i][j] = true;
            while let Some((ci, cj)) = stack.pop() {
                ilo = ilo.min(ci);
                ihi = ihi.max(ci);
                jlo = jlo.min(cj);
                jhi = jhi.max(cj);
                for di in -1i64..=1 {
                    for dj in -1i64..=1 {
                        let ni = ci as i64 + di;
                        let nj = cj as i64 + dj;
                        if ni < 0 || nj < 0 || ni >= n as i64 || nj >= n as i64 {
                            continue;
                        }
                        let (ni, nj) = (ni as usize, nj as usize);
                        if candidate[ni][nj] && !seen[ni][nj] {
                            seen[ni][nj] = true;
                            stack.push((ni, nj));
                        }
                    }
                }
            }
            boxes.push((ilo, ihi, jlo, jhi));
        }
    }
    boxes
}

/// Roots of a scalar function on [0, 1]: scan for sign changes, bisect each.
fn roots_on_unit_interval<F>(f: &F) -> Vec<f64>
where
    F: Fn(f64) -> f64,
{
    const SCAN: usize = 1024;
    let mut roots = Vec::new();
    let push = |x: f64, roots: &mut Vec<f64>| {
        if !roots.iter().any(|r: &f64| (r - x).abs() < PROFILE_TOL) {
            roots.push(x);
        }
    };
    let mut prev_x = 0.0;
    let mut prev_v = f(0.0);
    if prev_v == 0.0 {
        push(0.0, &mut roots);
    }
    for k in 1..=SCAN {
        let x = k as f64 / SCAN as f64;
        let v = f(x);
        if v == 0.0 {
            push(x, &mut roots);
        } else if prev_v != 0.0 && prev_v.signum() != v.signum() {
            let (mut lo, mut hi) = (prev_x, x);
            let mut flo = prev_v;
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if hi - lo < 1e-15 {
                    break;
                }
                let fm = f(mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if flo.signum() != fm.signum() {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            push(0.5 * (lo + hi), &mut roots);
        }
        prev_x = x;
        prev_v = v;
    }
    roots
}
