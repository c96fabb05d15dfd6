//! Local tactics as Kraus channels: all quantum mechanically possible local
//! manipulations, including measurement and ancilla coupling, in Kraus form.

use num_complex::Complex64;

use super::linalg::{mat2_dagger, mat2_identity, mat2_max_diff, mat2_mul, Mat2, ONE, ZERO};
#[cfg(test)]
use super::{Seat, TwoQubitState};
use super::unitary::LocalUnitary;
use crate::error::{Error, Result};
use crate::tolerance;

/// A completely positive trace-preserving map on one player's qubit,
/// rho -> sum_k K rho K^dagger.
///
/// Invariant: sum_k K^dagger K = I within [`tolerance::ALGEBRAIC`], with one
/// to four Kraus operators.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalChannel {
    kraus: Vec<Mat2>,
}

impl LocalChannel {
    pub fn new(kraus: Vec<[[Complex64; 2]; 2]>) -> Result<Self> {
        if kraus.is_empty() || kraus.len() > 4 {
            return Err(Error::KrausCount { count: kraus.len() });
        }
        for k in &kraus {
            for row in k {
                for e in row {
                    if !e.re.is_finite() || !e.im.is_finite() {
                        return Err(Error::NonFinite);
                    }
                }
            }
        }
        let channel = Self { kraus };
        let err = channel.completeness_error();
        if err > tolerance::ALGEBRAIC {
            return Err(Error::NotTracePreserving { err });
        }
        Ok(channel)
    }

    /// The do-nothing channel {I}.
    pub fn identity() -> Self {
        Self { kraus: vec![mat2_identity()] }
    }

    /// A unitary tactic viewed as a single-Kraus channel.
    pub fn from_unitary(u: &LocalUnitary) -> Self {
        Self { kraus: vec![*u.matrix()] }
    }

    /// Measures the qubit in the computational basis and prepares |target>
    /// regardless of the result: { |t><0|, |t><1| }. Destroys any
    /// entanglement with the other qubit.
    pub fn measure_and_set(target: u8) -> Self {
        let t = (target & 1) as usize;
        let mut k0 = [[ZERO; 2]; 2];
        let mut k1 = [[ZERO; 2]; 2];
        k0[t][0] = ONE; // |t><0|
        k1[t][1] = ONE; // |t><1|
        Self { kraus: vec![k0, k1] }
    }

    /// Fully dephasing channel { |0><0|, |1><1| }: kills off-diagonal terms.
    pub fn dephasing() -> Self {
        let mut k0 = [[ZERO; 2]; 2];
        let mut k1 = [[ZERO; 2]; 2];
        k0[0][0] = ONE;
        k1[1][1] = ONE;
        Self { kraus: vec![k0, k1] }
    }

    /// Rank-two channel family over six angles (a, b, r, theta, phi, lam):
    ///
    /// ```text
    /// K1 = diag(cos a, cos b) . W
    /// K2 = R(r) . diag(sin a, sin b) . W
    /// ```
    ///
    /// with W = su2(theta, phi, lam) and R(r) = su2(r, 0, 0). Completeness
    /// holds identically in the angles. The family contains the unitaries
    /// (a = b = 0), dephasing (a = 0, b = pi/2, r = 0) and measure-and-set
    /// (a = 0, b = pi/2, r = pi, and the mirrored settings for target 1).
    pub fn rank_two(angles: &[f64; 6]) -> Result<Self> {
        let [a, b, r, theta, phi, lam] = *angles;
        if !(a.is_finite() && b.is_finite() && r.is_finite()) {
            return Err(Error::NonFinite);
        }
        let w = LocalUnitary::su2(theta, phi, lam)?;
        let rot = LocalUnitary::su2(r, 0.0, 0.0)?;
        let d1 = [[Complex64::new(a.cos(), 0.0), ZERO], [ZERO, Complex64::new(b.cos(), 0.0)]];
        let d2 = [[Complex64::new(a.sin(), 0.0), ZERO], [ZERO, Complex64::new(b.sin(), 0.0)]];
        let k1 = mat2_mul(&d1, w.matrix());
        let k2 = mat2_mul(rot.matrix(), &mat2_mul(&d2, w.matrix()));
        Ok(Self { kraus: vec![k1, k2] })
    }

    pub fn kraus(&self) -> &[Mat2] {
        &self.kraus
    }

    /// Max |sum_k K^dagger K - I|; zero for an exactly trace-preserving map.
    pub fn completeness_error(&self) -> f64 {
        let mut sum = [[ZERO; 2]; 2];
        for k in &self.kraus {
            let term = mat2_mul(&mat2_dagger(k), k);
            for i in 0..2 {
                for j in 0..2 {
                    sum[i][j] += term[i][j];
                }
            }
        }
        mat2_max_diff(&sum, &mat2_identity())
    }
}
