//! The two-qubit entangling gate used by the gate-based quantization scheme.

use num_complex::Complex64;

use super::linalg::{mat4_dagger, mat4_identity, mat4_max_diff, mat4_mul, Mat4};
use crate::error::{Error, Result};
use crate::tolerance;

/// A 4x4 unitary preparing the initial strategy from |00>.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglingGate {
    j: Mat4,
}

impl EntanglingGate {
    pub fn new(j: [[Complex64; 4]; 4]) -> Result<Self> {
        for row in &j {
            for e in row {
                if !e.re.is_finite() || !e.im.is_finite() {
                    return Err(Error::NonFinite);
                }
            }
        }
        let err = mat4_max_diff(&mat4_mul(&mat4_dagger(&j), &j), &mat4_identity());
        if err > tolerance::ALGEBRAIC {
            return Err(Error::NotUnitary { err });
        }
        Ok(Self { j })
    }

    /// J = exp(i gamma_e sigma_x (x) sigma_x / 2) in closed form:
    /// cos(gamma_e/2) I + i sin(gamma_e/2) sigma_x (x) sigma_x.
    ///
    /// gamma_e runs from 0 (no entanglement) to pi/2 (maximal). Commutes with
    /// sigma_x (x) sigma_x, so the classical pure plays survive the gate pair.
    /// Note J(pi/2)|00> = (|00> + i|11>)/sqrt(2), which differs from the real
    /// Bell state by a relative phase.
    pub fn entangler(gamma_e: f64) -> Result<Self> {
        if !gamma_e.is_finite() {
            return Err(Error::NonFinite);
        }
        if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&gamma_e) {
            return Err(Error::AngleOutOfRange {
                value: gamma_e,
                lo: 0.0,
                hi: std::f64::consts::FRAC_PI_2,
            });
        }
        let c = Complex64::new((gamma_e / 2.0).cos(), 0.0);
        let is = Complex64::new(0.0, (gamma_e / 2.0).sin());
        let mut j = [[Complex64::new(0.0, 0.0); 4]; 4];
        for i in 0..4 {
            j[i][i] = c;
            // sigma_x (x) sigma_x is the anti-diagonal permutation.
            j[i][3 - i] = is;
        }
        Ok(Self { j })
    }

    /// The inverse gate J^dagger.
    pub fn dagger(&self) -> Self {
        Self { j: mat4_dagger(&self.j) }
    }

    pub fn matrix(&self) -> &[[Complex64; 4]; 4] {
        &self.j
    }
}
