//! Pure and mixed joint states of the two strategy qubits.

use num_complex::Complex64;

use super::channel::LocalChannel;
use super::entangler::EntanglingGate;
use super::linalg::{
    hermitian_eigenvalues, kron, mat2_identity, mat4_apply, mat4_dagger, mat4_mul, Mat4, ZERO,
};
use super::unitary::LocalUnitary;
use super::Seat;
use crate::error::{Error, Result};
use crate::tolerance;

/// Joint pure state of the two strategy qubits.
///
/// Amplitudes are ordered |00>, |01>, |10>, |11> with the first index being
/// player 1's qubit. Normalized to 1 within [`tolerance::ALGEBRAIC`].
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitState {
    amp: [Complex64; 4],
}

impl TwoQubitState {
    pub fn new(amp: [Complex64; 4]) -> Result<Self> {
        for a in &amp {
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(Error::NonFinite);
            }
        }
        let norm = amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > tolerance::ALGEBRAIC {
            return Err(Error::NotNormalized { norm, tol: tolerance::ALGEBRAIC });
        }
        Ok(Self { amp })
    }

    /// Computational basis state |b1 b2>.
    pub fn basis(b1: u8, b2: u8) -> Self {
        let mut amp = [ZERO; 4];
        amp[(2 * (b1 & 1) + (b2 & 1)) as usize] = Complex64::new(1.0, 0.0);
        Self { amp }
    }

    /// The maximally entangled initial strategy (|00> + |11>)/sqrt(2),
    /// with real amplitudes. Distinct from the state the entangling gate
    /// prepares from |00>, which carries a relative phase i on |11>.
    pub fn phi_plus() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self { amp: [h, ZERO, ZERO, h] }
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amp
    }

    pub fn norm(&self) -> f64 {
        self.amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// True iff the states agree up to a global phase: |<a|b>| >= 1 - tol.
    pub fn equal_up_to_phase(&self, other: &Self, tol: f64) -> bool {
        self.inner(other).norm() >= 1.0 - tol
    }

    /// Born-rule probabilities of the outcomes (00, 01, 10, 11).
    pub fn outcome_distribution(&self) -> [f64; 4] {
        [
            self.amp[0].norm_sqr(),
            self.amp[1].norm_sqr(),
            self.amp[2].norm_sqr(),
            self.amp[3].norm_sqr(),
        ]
    }

    /// Applies a local unitary to one player's qubit; norm preserved.
    pub fn apply_local_unitary(&self, u: &LocalUnitary, seat: Seat) -> Self {
        let m = u.matrix();
        let a = &self.amp;
        let amp = match seat {
            // index 2*b1 + b2; seat 1 acts on b1, seat 2 on b2
            Seat::Player1 => [
                m[0][0] * a[0] + m[0][1] * a[2],
                m[0][0] * a[1] + m[0][1] * a[3],
                m[1][0] * a[0] + m[1][1] * a[2],
                m[1][0] * a[1] + m[1][1] * a[3],
            ],
            Seat::Player2 => [
                m[0][0] * a[0] + m[0][1] * a[1],
                m[1][0] * a[0] + m[1][1] * a[1],
                m[0][0] * a[2] + m[0][1] * a[3],
                m[1][0] * a[2] + m[1][1] * a[3],
            ],
        };
        Self { amp }
    }

    /// Applies a two-qubit entangling gate.
    pub fn apply_gate(&self, gate: &EntanglingGate) -> Self {
        Self { amp: mat4_apply(gate.matrix(), &self.amp) }
    }

    /// Haar-random pure state (normalized complex-Gaussian amplitudes) from
    /// an explicit random source.
    pub fn random_haar<R: rand::Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let mut amp = [ZERO; 4];
            for a in &mut amp {
                *a = super::unitary::gaussian(rng);
            }
            let norm = amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-6 {
                continue;
            }
            for a in &mut amp {
                *a /= norm;
            }
            return Self { amp };
        }
    }

    /// The projector |self><self| as a density matrix.
    pub fn to_density(&self) -> TwoQubitDensity {
        let mut rho = [[ZERO; 4]; 4];
        for (i, row) in rho.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = self.amp[i] * self.amp[j].conj();
            }
        }
        TwoQubitDensity { rho }
    }
}

/// Mixed joint state of the two strategy qubits, needed for probabilistic
/// tactic mixtures and channel outputs.
///
/// Invariants: Hermitian and unit trace within [`tolerance::ALGEBRAIC`],
/// eigenvalues above [`tolerance::EIGENVALUE_FLOOR`].
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitDensity {
    rho: Mat4,
}

impl TwoQubitDensity {
    pub fn new(rho: [[Complex64; 4]; 4]) -> Result<Self> {
        for row in &rho {
            for e in row {
                if !e.re.is_finite() || !e.im.is_finite() {
                    return Err(Error::NonFinite);
                }
            }
        }
        let density = Self { rho };
        density.check_invariants()?;
        Ok(density)
    }

    /// Convex mixture of pure states; weights must be a probability vector.
    pub fn mixture(parts: &[(f64, TwoQubitState)]) -> Result<Self> {
        let mut sum = 0.0;
        for (w, _) in parts {
            if !w.is_finite() || *w < -tolerance::ALGEBRAIC {
                return Err(Error::InvalidProbability { value: *w });
            }
            sum += w;
        }
        if (sum - 1.0).abs() > tolerance::DISTRIBUTION_SUM {
            return Err(Error::InvalidDistribution { sum, tol: tolerance::DISTRIBUTION_SUM });
        }
        let mut rho = [[ZERO; 4]; 4];
        for (w, state) in parts {
            let a = state.amplitudes();
            for (i, row) in rho.iter_mut().enumerate() {
                for (j, entry) in row.iter_mut().enumerate() {
                    *entry += *w * a[i] * a[j].conj();
                }
            }
        }
        Ok(Self { rho })
    }

    pub fn matrix(&self) -> &[[Complex64; 4]; 4] {
        &self.rho
    }

    /// Matrix element <i|rho|j> in the basis ordering (00, 01, 10, 11).
    pub fn element(&self, i: usize, j: usize) -> Complex64 {
        self.rho[i][j]
    }

    pub fn trace(&self) -> f64 {
        (0..4).map(|i| self.rho[i][i].re).sum()
    }

    /// Eigenvalues, ascending (real since the matrix is Hermitian).
    pub fn eigenvalues(&self) -> [f64; 4] {
        hermitian_eigenvalues(&self.rho)
    }

    /// Re-checks the type invariants; used by constructors and tests.
    pub fn check_invariants(&self) -> Result<()> {
        let herm_err = {
            let mut m = 0.0f64;
            for i in 0..4 {
                for j in 0..4 {
                    m = m.max((self.rho[i][j] - self.rho[j][i].conj()).norm());
                }
            }
            m
        };
        if herm_err > tolerance::ALGEBRAIC {
            return Err(Error::NotHermitian { err: herm_err });
        }
        let trace = self.trace();
        if (trace - 1.0).abs() > tolerance::ALGEBRAIC {
            return Err(Error::TraceNotOne { trace });
        }
        let min_eigenvalue = self.eigenvalues()[0];
        if min_eigenvalue < tolerance::EIGENVALUE_FLOOR {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(())
    }

    /// Diagonal of rho: Born-rule outcome probabilities.
    pub fn outcome_distribution(&self) -> [f64; 4] {
        [
            self.rho[0][0].re,
            self.rho[1][1].re,
            self.rho[2][2].re,
            self.rho[3][3].re,
        ]
    }

    /// Conjugates by u on one seat: rho -> (u (x) I) rho (u (x) I)^dagger.
    pub fn apply_local_unitary(&self, u: &LocalUnitary, seat: Seat) -> Self {
        let id = mat2_identity();
        let full = match seat {
            Seat::Player1 => kron(u.matrix(), &id),
            Seat::Player2 => kron(&id, u.matrix()),
        };
        Self { rho: mat4_mul(&mat4_mul(&full, &self.rho), &mat4_dagger(&full)) }
    }

    /// Applies a Kraus channel to one seat: rho -> sum_k (K (x) I) rho (K (x) I)^dagger.
    pub fn apply_channel(&self, channel: &LocalChannel, seat: Seat) -> Self {
        let id = mat2_identity();
        let mut out = [[ZERO; 4]; 4];
        for k in channel.kraus() {
            let full = match seat {
                Seat::Player1 => kron(k, &id),
                Seat::Player2 => kron(&id, k),
            };
            let term = mat4_mul(&mat4_mul(&full, &self.rho), &mat4_dagger(&full));
            for i in 0..4 {
                for j in 0..4 {
                    out[i][j] += term[i][j];
                }
            }
        }
        Self { rho: out }
    }

    pub fn apply_gate(&self, gate: &EntanglingGate) -> Self {
        let j = gate.matrix();
        Self { rho: mat4_mul(&mat4_mul(j, &self.rho), &mat4_dagger(j)) }
    }
}
