//! Local (single-qubit) unitary tactics.

use num_complex::Complex64;
use rand::Rng;

use super::linalg::{mat2_dagger, mat2_identity, mat2_max_diff, mat2_mul, Mat2, ONE, ZERO};
use crate::error::{Error, Result};
use crate::tolerance;

/// A 2x2 unitary acting on one player's qubit.
///
/// Holds the identity, the spin flip, and every SU(2) tactic; the only
/// invariant is unitarity within [`tolerance::ALGEBRAIC`].
#[derive(Debug, Clone, PartialEq)]
pub struct LocalUnitary {
    u: Mat2,
}

impl LocalUnitary {
    /// Validates unitarity and rejects non-finite entries.
    pub fn new(u: [[Complex64; 2]; 2]) -> Result<Self> {
        for row in &u {
            for e in row {
                if !e.re.is_finite() || !e.im.is_finite() {
                    return Err(Error::NonFinite);
                }
            }
        }
        let err = mat2_max_diff(&mat2_mul(&mat2_dagger(&u), &u), &mat2_identity());
        if err > tolerance::ALGEBRAIC {
            return Err(Error::NotUnitary { err });
        }
        Ok(Self { u })
    }

    pub fn identity() -> Self {
        Self { u: mat2_identity() }
    }

    /// The spin-flip (Pauli X) tactic.
    pub fn sigma_x() -> Self {
        Self { u: [[ZERO, ONE], [ONE, ZERO]] }
    }

    /// SU(2) element from three Euler-like angles:
    ///
    /// ```text
    /// [ e^{i phi} cos(theta/2)     e^{i lam} sin(theta/2)  ]
    /// [ -e^{-i lam} sin(theta/2)   e^{-i phi} cos(theta/2) ]
    /// ```
    ///
    /// Covers the whole group (determinant 1) and reduces to the identity at
    /// theta = 0 and to the spin flip, up to global phase, at theta = pi.
    pub fn su2(theta: f64, phi: f64, lam: f64) -> Result<Self> {
        if !(theta.is_finite() && phi.is_finite() && lam.is_finite()) {
            return Err(Error::NonFinite);
        }
        let c = (theta / 2.0).cos();
        let s = (theta / 2.0).sin();
        let u = [
            [Complex64::from_polar(c, phi), Complex64::from_polar(s, lam)],
            [-Complex64::from_polar(s, -lam), Complex64::from_polar(c, -phi)],
        ];
        Ok(Self { u })
    }

    /// Elementwise complex conjugate; still unitary.
    pub fn conjugate(&self) -> Self {
        let mut u = self.u;
        for row in &mut u {
            for e in row {
                *e = e.conj();
            }
        }
        Self { u }
    }

    /// Hermitian conjugate (the inverse).
    pub fn dagger(&self) -> Self {
        Self { u: mat2_dagger(&self.u) }
    }

    pub fn matrix(&self) -> &[[Complex64; 2]; 2] {
        &self.u
    }

    pub fn determinant(&self) -> Complex64 {
        self.u[0][0] * self.u[1][1] - self.u[0][1] * self.u[1][0]
    }

    /// Haar-distributed SU(2) element from an explicit random source.
    ///
    /// Orthonormalizes a complex-Gaussian 2x2 matrix (Gram-Schmidt keeps the
    /// triangular factor's diagonal positive, which is what makes the result
    /// Haar on U(2)), then removes the determinant phase.
    pub fn random_su2<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let g = [
                [gaussian(rng), gaussian(rng)],
                [gaussian(rng), gaussian(rng)],
            ];
            let n0 = (g[0][0].norm_sqr() + g[1][0].norm_sqr()).sqrt();
            if n0 < 1e-6 {
                continue;
            }
            let v0 = [g[0][0] / n0, g[1][0] / n0];
            let overlap = v0[0].conj() * g[0][1] + v0[1].conj() * g[1][1];
            let w = [g[0][1] - overlap * v0[0], g[1][1] - overlap * v0[1]];
            let n1 = (w[0].norm_sqr() + w[1].norm_sqr()).sqrt();
            if n1 < 1e-6 {
                continue;
            }
            let v1 = [w[0] / n1, w[1] / n1];
            let mut u = [[v0[0], v1[0]], [v0[1], v1[1]]];

            // det(u) lies on the unit circle; dividing by its square root
            // lands in SU(2).
            let det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
            let half_phase = Complex64::from_polar(1.0, -det.arg() / 2.0);
            for row in &mut u {
                for e in row {
                    *e *= half_phase;
                }
            }
            return Self { u };
        }
    }

    /// Max |u^dagger u - I|; zero for an exact unitary.
    pub fn unitarity_error(&self) -> f64 {
        mat2_max_diff(&mat2_mul(&mat2_dagger(&self.u), &self.u), &mat2_identity())
    }
}

/// Standard normal via Box-Muller on the explicit source.
pub(crate) fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (-2.0 * u1.ln()).sqrt();
    Complex64::new(r * u2.cos(), r * u2.sin())
}
