//! Small fixed-size matrix kernel for the 3-state filter.
//!
//! The state dimension is 3 and the measurement dimension is at most 2, so
//! everything here is closed-form; there is no general linear-algebra
//! backend behind these types.

#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Row-major 3×3 matrix.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct Mat3(pub [[f64; 3]; 3]);

/// Row-major 2×2 matrix.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct Mat2(pub [[f64; 2]; 2]);

/// Row-major 3×2 matrix (3 rows, 2 columns).
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct Mat3x2(pub [[f64; 2]; 3]);

impl Mat3 {
    pub fn zeros() -> Self {
        Mat3([[0.0; 3]; 3])
    }

    pub fn identity() -> Self {
        Mat3::diag(1.0, 1.0, 1.0)
    }

    pub fn diag(a: f64, b: f64, c: f64) -> Self {
        Mat3([[a, 0.0, 0.0], [0.0, b, 0.0], [0.0, 0.0, c]])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Mat3([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    pub fn mul(&self, rhs: &Mat3) -> Self {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Mat3(out)
    }

    /// Product with a 3×2 matrix, giving a 3×2 matrix.
    pub fn mul_32(&self, rhs: &Mat3x2) -> Mat3x2 {
        let mut out = [[0.0; 2]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Mat3x2(out)
    }

    pub fn mul_vec(&self, v: [f64; 3]) -> [f64; 3] {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }

    pub fn add(&self, rhs: &Mat3) -> Self {
        let mut out = self.0;
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell += rhs.0[i][j];
            }
        }
        Mat3(out)
    }

    pub fn sub(&self, rhs: &Mat3) -> Self {
        let mut out = self.0;
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell -= rhs.0[i][j];
            }
        }
        Mat3(out)
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = self.0;
        for row in out.iter_mut() {
            for cell in row.iter_mut() {
                *cell *= s;
            }
        }
        Mat3(out)
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    /// ½(M + Mᵀ).
    pub fn symmetrize(&self) -> Self {
        self.add(&self.transpose()).scale(0.5)
    }

    /// Largest absolute entry of M − Mᵀ.
    pub fn max_asymmetry(&self) -> f64 {
        let m = &self.0;
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((m[i][j] - m[j][i]).abs());
            }
        }
        worst
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Inverse by adjugate; `None` when the determinant vanishes.
    pub fn inverse(&self) -> Option<Mat3> {
        let m = &self.0;
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let inv_det = 1.0 / det;
        let cof = [
            [
                m[1][1] * m[2][2] - m[1][2] * m[2][1],
                m[0][2] * m[2][1] - m[0][1] * m[2][2],
                m[0][1] * m[1][2] - m[0][2] * m[1][1],
            ],
            [
                m[1][2] * m[2][0] - m[1][0] * m[2][2],
                m[0][0] * m[2][2] - m[0][2] * m[2][0],
                m[0][2] * m[1][0] - m[0][0] * m[1][2],
            ],
            [
                m[1][0] * m[2][1] - m[1][1] * m[2][0],
                m[0][1] * m[2][0] - m[0][0] * m[2][1],
                m[0][0] * m[1][1] - m[0][1] * m[1][0],
            ],
        ];
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = cof[i][j] * inv_det;
            }
        }
        Some(Mat3(out))
    }

    /// True when the minimum eigenvalue exceeds −`tol`, i.e. the matrix is
    /// positive semidefinite within tolerance. Checked by attempting a
    /// Cholesky factorization of M + tol·I, which succeeds exactly when
    /// M + tol·I is positive definite. Assumes a symmetric input.
    pub fn is_psd_within(&self, tol: f64) -> bool {
        let m = &self.0;
        let mut l = [[0.0f64; 3]; 3];
        for i in 0..3 {
            for j in 0..=i {
                let mut sum = m[i][j] + if i == j { tol } else { 0.0 };
                for k in 0..j {
                    sum -= l[i][k] * l[j][k];
                }
                if i == j {
                    if sum <= 0.0 || !sum.is_finite() {
                        return false;
                    }
                    l[i][j] = sum.sqrt();
                } else {
                    l[i][j] = sum / l[j][j];
                }
            }
        }
        true
    }

    /// Eigenvalues of a symmetric matrix in ascending order, via the
    /// trigonometric closed form for the 3×3 characteristic cubic.
    pub fn sym_eigenvalues(&self) -> [f64; 3] {
        let m = &self.0;
        let p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
        if p1 == 0.0 {
            let mut e = [m[0][0], m[1][1], m[2][2]];
            sort3(&mut e);
            return e;
        }
        let q = self.trace() / 3.0;
        let p2 = (m[0][0] - q) * (m[0][0] - q)
            + (m[1][1] - q) * (m[1][1] - q)
            + (m[2][2] - q) * (m[2][2] - q)
            + 2.0 * p1;
        let p = (p2 / 6.0).sqrt();
        if p == 0.0 {
            return [q, q, q];
        }
        let b = self.sub(&Mat3::diag(q, q, q)).scale(1.0 / p);
        let r = (b.det() / 2.0).clamp(-1.0, 1.0);
        let phi = r.acos() / 3.0;
        let two_pi_3 = 2.0 * core::f64::consts::PI / 3.0;
        let e_hi = q + 2.0 * p * phi.cos();
        let e_lo = q + 2.0 * p * (phi + two_pi_3).cos();
        let e_mid = 3.0 * q - e_hi - e_lo;
        let mut e = [e_lo, e_mid, e_hi];
        sort3(&mut e);
        e
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|row| row.iter().all(|x| x.is_finite()))
    }
}

impl Mat2 {
    pub fn diag(a: f64, b: f64) -> Self {
        Mat2([[a, 0.0], [0.0, b]])
    }

    pub fn identity() -> Self {
        Mat2::diag(1.0, 1.0)
    }

    pub fn add(&self, rhs: &Mat2) -> Self {
        Mat2([
            [self.0[0][0] + rhs.0[0][0], self.0[0][1] + rhs.0[0][1]],
            [self.0[1][0] + rhs.0[1][0], self.0[1][1] + rhs.0[1][1]],
        ])
    }

    pub fn det(&self) -> f64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn inverse(&self) -> Option<Mat2> {
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let inv_det = 1.0 / det;
        Some(Mat2([
            [self.0[1][1] * inv_det, -self.0[0][1] * inv_det],
            [-self.0[1][0] * inv_det, self.0[0][0] * inv_det],
        ]))
    }

    /// Eigenvalues of a symmetric matrix, ascending.
    pub fn sym_eigenvalues(&self) -> [f64; 2] {
        let tr = self.0[0][0] + self.0[1][1];
        let disc = (tr * tr - 4.0 * self.det()).max(0.0).sqrt();
        [(tr - disc) / 2.0, (tr + disc) / 2.0]
    }
}

impl Mat3x2 {
    pub fn zeros() -> Self {
        Mat3x2([[0.0; 2]; 3])
    }

    /// Product with a 2×2 matrix on the right.
    pub fn mul_mat2(&self, rhs: &Mat2) -> Mat3x2 {
        let mut out = [[0.0; 2]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.0[i][0] * rhs.0[0][j] + self.0[i][1] * rhs.0[1][j];
            }
        }
        Mat3x2(out)
    }

    /// self · rhsᵀ, a 3×3 matrix.
    pub fn mul_bt(&self, rhs: &Mat3x2) -> Mat3 {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.0[i][0] * rhs.0[j][0] + self.0[i][1] * rhs.0[j][1];
            }
        }
        Mat3(out)
    }

    /// selfᵀ · P · self, a 2×2 matrix.
    pub fn sandwich(&self, p: &Mat3) -> Mat2 {
        let ph = p.mul_32(self); // 3×2
        let mut out = [[0.0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.0[k][i] * ph.0[k][j]).sum();
            }
        }
        Mat2(out)
    }

    pub fn mul_vec2(&self, v: [f64; 2]) -> [f64; 3] {
        [
            self.0[0][0] * v[0] + self.0[0][1] * v[1],
            self.0[1][0] * v[0] + self.0[1][1] * v[1],
            self.0[2][0] * v[0] + self.0[2][1] * v[1],
        ]
    }
}

fn sort3(e: &mut [f64; 3]) {
    if e[0] > e[1] {
        e.swap(0, 1);
    }
    if e[1] > e[2] {
        e.swap(1, 2);
    }
    if e[0] > e[1] {
        e.swap(0, 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn inverse_roundtrip() {
        let m = Mat3([[2.0, 1.0, 0.5], [0.3, 3.0, -0.2], [-0.1, 0.4, 1.5]]);
        let inv = m.inverse().unwrap();
        let prod = m.mul(&inv);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert_relative_eq!(prod.0[i][j], expect, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = Mat3([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [0.0, 1.0, 0.0]]);
        assert!(m.inverse().is_none());
    }

    #[test]
    fn eigenvalues_of_diagonal() {
        let e = Mat3::diag(3.0, -1.0, 2.0).sym_eigenvalues();
        assert_eq!(e, [-1.0, 2.0, 3.0]);
    }

    #[test]
    fn eigenvalues_match_characteristic_polynomial() {
        let m = Mat3([[4.0, 1.0, -0.5], [1.0, 3.0, 0.2], [-0.5, 0.2, 2.0]]);
        for lambda in m.sym_eigenvalues() {
            let shifted = m.sub(&Mat3::diag(lambda, lambda, lambda));
            assert_relative_eq!(shifted.det(), 0.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn psd_check_agrees_with_eigenvalues() {
        let psd = Mat3([[2.0, 0.5, 0.0], [0.5, 1.0, 0.1], [0.0, 0.1, 0.5]]);
        assert!(psd.is_psd_within(1e-12));
        assert!(psd.sym_eigenvalues()[0] > 0.0);

        let indef = Mat3([[1.0, 2.0, 0.0], [2.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        assert!(!indef.is_psd_within(1e-12));
        assert!(indef.sym_eigenvalues()[0] < 0.0);
    }

    #[test]
    fn sandwich_matches_explicit_product() {
        let p = Mat3([[2.0, 0.1, 0.0], [0.1, 1.5, -0.2], [0.0, -0.2, 0.8]]);
        let ht = Mat3x2([[1.0, 0.0], [0.0, 1.0], [0.5, -0.3]]);
        let s = ht.sandwich(&p);
        // Explicit (Hᵀ)ᵀ P Hᵀ with H rows [1,0,0.5] and [0,1,-0.3].
        let h = [[1.0, 0.0, 0.5], [0.0, 1.0, -0.3]];
        for i in 0..2 {
            for j in 0..2 {
                let mut expect = 0.0;
                for a in 0..3 {
                    for b in 0..3 {
                        expect += h[i][a] * p.0[a][b] * h[j][b];
                    }
                }
                assert_relative_eq!(s.0[i][j], expect, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn symmetrize_and_asymmetry() {
        let m = Mat3([[1.0, 2.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        assert_relative_eq!(m.max_asymmetry(), 1.0);
        assert_relative_eq!(m.symmetrize().max_asymmetry(), 0.0);
    }
}
