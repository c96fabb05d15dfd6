//! Bounded Nelder-Mead simplex maximizer.
//!
//! The payoff surfaces here are smooth, cheap and at most 12-dimensional, so
//! a plain simplex with box clamping is enough; the multistart driver in the
//! parent module handles global coverage.

#[derive(Debug, Clone)]
pub(crate) struct Bounds {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl Bounds {
    pub fn clamp(&self, x: &mut [f64]) {
        for (v, (lo, hi)) in x.iter_mut().zip(self.lo.iter().zip(&self.hi)) {
            *v = v.clamp(*lo, *hi);
        }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

/// Maximizes f over the box from the given start, running at most
/// `max_iters` simplex iterations. Returns the best vertex found.
pub(crate) fn nelder_mead_max<F>(
    f: &mut F,
    start: &[f64],
    bounds: &Bounds,
    max_iters: usize,
) -> (Vec<f64>, f64)
where
    F: FnMut(&[f64]) -> f64,
{
    let n = bounds.dim();
    debug_assert_eq!(start.len(), n);

    // Initial simplex: the start plus one displaced vertex per axis,
    // reflected inward when the step would leave the box.
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    let mut x0 = start.to_vec();
    bounds.clamp(&mut x0);
    let v0 = f(&x0);
    simplex.push((x0.clone(), v0));
    for i in 0..n {
        let span = bounds.hi[i] - bounds.lo[i];
        let step = if span > 0.0 { 0.15 * span } else { 0.1 };
        let mut x = x0.clone();
        x[i] = if x[i] + step <= bounds.hi[i] { x[i] + step } else { x[i] - step };
        bounds.clamp(&mut x);
        let v = f(&x);
        simplex.push((x, v));
    }

    for _ in 0..max_iters {
        // best first
        simplex.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
        let spread = simplex[0].1 - simplex[n].1;
        let diameter: f64 = (0..n)
            .map(|i| {
                simplex
                    .iter()
                    .map(|(x, _)| x[i])
                    .fold(f64::NEG_INFINITY, f64::max)
                    - simplex.iter().map(|(x, _)| x[i]).fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max);
        if spread.abs() < 1e-14 && diameter < 1e-12 {
            break;
        }

        let centroid: Vec<f64> = (0..n)
            .map(|i| simplex[..n].iter().map(|(x, _)| x[i]).sum::<f64>() / n as f64)
            .collect();
        let worst = simplex[n].clone();

        let mut reflected: Vec<f64> = centroid
            .iter()
            .zip(&worst.0)
            .map(|(c, w)| c + REFLECT * (c - w))
            .collect();
        bounds.clamp(&mut reflected);
        let fr = f(&reflected);

        if fr > simplex[0].1 {
            let mut expanded: Vec<f64> = centroid
                .iter()
                .zip(&worst.0)
                .map(|(c, w)| c + EXPAND * (c - w))
                .collect();
            bounds.clamp(&mut expanded);
            let fe = f(&expanded);
            simplex[n] = if fe > fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr > simplex[n - 1].1 {
            simplex[n] = (reflected, fr);
        } else {
            let mut contracted: Vec<f64> = centroid
                .iter()
                .zip(&worst.0)
                .map(|(c, w)| c + CONTRACT * (w - c))
                .collect();
            bounds.clamp(&mut contracted);
            let fc = f(&contracted);
            if fc > worst.1 {
                simplex[n] = (contracted, fc);
            } else {
                let best = simplex[0].0.clone();
                for vertex in simplex.iter_mut().skip(1) {
                    for (x, b) in vertex.0.iter_mut().zip(&best) {
                        *x = b + SHRINK * (*x - b);
                    }
                    bounds.clamp(&mut vertex.0);
                    vertex.1 = f(&vertex.0);
                }
            }
        }
    }

    simplex.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
    simplex[0].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_quadratic_maximum() {
        let bounds = Bounds { lo: vec![-2.0, -2.0], hi: vec![2.0, 2.0] };
        let mut f = |x: &[f64]| -(x[0] - 0.7).powi(2) - (x[1] + 0.3).powi(2);
        let (x, v) = nelder_mead_max(&mut f, &[0.0, 0.0], &bounds, 500);
        assert!((x[0] - 0.7).abs() < 1e-6);
        assert!((x[1] + 0.3).abs() < 1e-6);
        assert!(v > -1e-10);
    }

    #[test]
    fn respects_bounds_when_maximum_is_outside() {
        let bounds = Bounds { lo: vec![0.0], hi: vec![1.0] };
        let mut f = |x: &[f64]| x[0];
        let (x, v) = nelder_mead_max(&mut f, &[0.2], &bounds, 200);
        assert!((x[0] - 1.0).abs() < 1e-9);
        assert!((v - 1.0).abs() < 1e-9);
    }

    #[test]
    fn handles_multimodal_from_good_start() {
        let bounds = Bounds { lo: vec![-4.0], hi: vec![4.0] };
        // peaks near -2 (height 1) and +2 (height 2)
        let mut f = |x: &[f64]| {
            let a = (-(x[0] + 2.0).powi(2)).exp();
            let b = 2.0 * (-(x[0] - 2.0).powi(2)).exp();
            a + b
        };
        let (x, _) = nelder_mead_max(&mut f, &[1.5], &bounds, 400);
        assert!((x[0] - 2.0).abs() < 1e-4);
    }
}
