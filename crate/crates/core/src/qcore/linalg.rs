//! Small fixed-size complex matrix helpers shared by the qcore types.

// Index loops mirror the textbook formulas.
#![allow(clippy::needless_range_loop)]

use num_complex::Complex64;

pub(crate) type Mat2 = [[Complex64; 2]; 2];
pub(crate) type Mat4 = [[Complex64; 4]; 4];

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub(crate) fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub(crate) fn mat2_dagger(a: &Mat2) -> Mat2 {
    [[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]]
}

/// Max elementwise |a - b|.
pub(crate) fn mat2_max_diff(a: &Mat2, b: &Mat2) -> f64 {
    let mut m = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            m = m.max((a[i][j] - b[i][j]).norm());
        }
    }
    m
}

pub(crate) fn mat2_identity() -> Mat2 {
    [[ONE, ZERO], [ZERO, ONE]]
}

/// Kronecker product; row index 2i+k, column index 2j+l carries a[i][j]*b[k][l].
pub(crate) fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub(crate) fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = ZERO;
            for k in 0..4 {
                acc += a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub(crate) fn mat4_dagger(a: &Mat4) -> Mat4 {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

pub(crate) fn mat4_apply(m: &Mat4, v: &[Complex64; 4]) -> [Complex64; 4] {
    let mut out = [ZERO; 4];
    for i in 0..4 {
        let mut acc = ZERO;
        for k in 0..4 {
            acc += m[i][k] * v[k];
        }
        out[i] = acc;
    }
    out
}

pub(crate) fn mat4_max_diff(a: &Mat4, b: &Mat4) -> f64 {
    let mut m = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            m = m.max((a[i][j] - b[i][j]).norm());
        }
    }
    m
}

pub(crate) fn mat4_identity() -> Mat4 {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..4 {
        out[i][i] = ONE;
    }
    out
}

/// Eigenvalues of a 4x4 Hermitian matrix by cyclic Jacobi rotations,
/// ascending. Convergence is quadratic; a handful of sweeps reaches
/// machine precision for these tiny matrices.
pub(crate) fn hermitian_eigenvalues(m: &Mat4) -> [f64; 4] {
    let mut a = *m;
    let scale: f64 = {
        let mut s = 0.0f64;
        for row in &a {
            for e in row {
                s = s.max(e.norm());
            }
        }
        s.max(1.0)
    };

    for _sweep in 0..50 {
        let mut off = 0.0f64;
        for p in 0..4 {
            for q in (p + 1)..4 {
                off = off.max(a[p][q].norm());
            }
        }
        if off < 1e-15 * scale {
            break;
        }
        for p in 0..4 {
            for q in (p + 1)..4 {
                let g = a[p][q];
                let mag = g.norm();
                if mag < 1e-300 {
                    continue;
                }
                let u = g / mag;
                let tau = (a[q][q].re - a[p][p].re) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // A <- R^dagger A R with the rotation in the (p,q) plane:
                // R[p][p] = c, R[q][q] = c, R[p][q] = s*u, R[q][p] = -s*conj(u).
                let su = s * u;
                for k in 0..4 {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = akp * c - akq * su.conj();
                    a[k][q] = akp * su + akq * c;
                }
                for k in 0..4 {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = apk * c - aqk * su;
                    a[q][k] = apk * su.conj() + aqk * c;
                }
            }
        }
    }

    let mut eigs = [a[0][0].re, a[1][1].re, a[2][2].re, a[3][3].re];
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eigs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn jacobi_diagonal_matrix() {
        let mut m = [[ZERO; 4]; 4];
        for (i, v) in [0.4, 0.1, 0.3, 0.2].iter().enumerate() {
            m[i][i] = c(*v, 0.0);
        }
        let eigs = hermitian_eigenvalues(&m);
        assert_eq!(eigs, [0.1, 0.2, 0.3, 0.4]);
    }

    #[test]
    fn jacobi_rank_one_projector() {
        // |psi><psi| for psi = (1,0,0,1)/sqrt(2) has eigenvalues {1, 0, 0, 0}.
        let h = c(0.5, 0.0);
        let mut m = [[ZERO; 4]; 4];
        m[0][0] = h;
        m[0][3] = h;
        m[3][0] = h;
        m[3][3] = h;
        let eigs = hermitian_eigenvalues(&m);
        assert!((eigs[3] - 1.0).abs() < 1e-14);
        for e in &eigs[..3] {
            assert!(e.abs() < 1e-14);
        }
    }

    #[test]
    fn jacobi_complex_offdiagonal() {
        // Hermitian matrix with complex couplings; eigenvalues checked via
        // the trace and the sum of squares (Frobenius) invariants.
        let m: Mat4 = [
            [c(1.0, 0.0), c(0.2, 0.3), c(0.0, -0.1), c(0.05, 0.0)],
            [c(0.2, -0.3), c(0.5, 0.0), c(0.1, 0.2), ZERO],
            [c(0.0, 0.1), c(0.1, -0.2), c(-0.3, 0.0), c(0.0, 0.4)],
            [c(0.05, 0.0), ZERO, c(0.0, -0.4), c(0.8, 0.0)],
        ];
        let eigs = hermitian_eigenvalues(&m);
        let trace: f64 = (0..4).map(|i| m[i][i].re).sum();
        let frob: f64 = m.iter().flatten().map(|e| e.norm_sqr()).sum();
        assert!((eigs.iter().sum::<f64>() - trace).abs() < 1e-12);
        assert!((eigs.iter().map(|e| e * e).sum::<f64>() - frob).abs() < 1e-12);
    }

    #[test]
    fn kron_index_convention() {
        let x: Mat2 = [[ZERO, ONE], [ONE, ZERO]];
        let xi = kron(&x, &mat2_identity());
        // sigma_x on the first factor maps |00> (index 0) to |10> (index 2).
        assert_eq!(xi[2][0], ONE);
        assert_eq!(xi[0][2], ONE);
        assert_eq!(xi[0][0], ZERO);
    }
}
