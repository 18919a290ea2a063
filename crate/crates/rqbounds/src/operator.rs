//! Hermitian operators (dense or diagonal), Rayleigh quotients and residuals.

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::vector::{inner, Vector};

/// Relative Frobenius tolerance for accepting a dense matrix as Hermitian.
pub const HERMITIAN_REL_TOL: f64 = 1e-12;

/// Square dense matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T: Field> {
    n: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Build from rows; all rows must have the same length as the row count.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidParameter("matrix must be at least 1x1".into()));
        }
        let mut data = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        if data.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFiniteEntry);
        }
        Ok(Self { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.n + j] = value;
    }

    pub fn fro_norm(&self) -> f64 {
        self.data.iter().map(|e| e.abs_sq()).sum::<f64>().sqrt()
    }

    /// Frobenius norm of `self - self^*`.
    pub fn hermitian_defect(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                let d = self.get(i, j) - self.get(j, i).conj();
                s += d.abs_sq();
            }
        }
        s.sqrt()
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Repr<T: Field> {
    Dense(Matrix<T>),
    Diagonal(Vec<f64>),
}

/// Self-adjoint operator on a real or complex space of dimension `dim`.
///
/// Dense construction enforces the Hermitian property up to a relative
/// Frobenius tolerance of [`HERMITIAN_REL_TOL`] and then symmetrizes, so
/// downstream arithmetic sees an exactly Hermitian matrix. Diagonal
/// operators carry real entries only.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator<T: Field> {
    repr: Repr<T>,
    dim: usize,
}

impl<T: Field> HermitianOperator<T> {
    pub fn from_dense(m: Matrix<T>) -> Result<Self> {
        let norm = m.fro_norm();
        let defect = m.hermitian_defect();
        if defect > HERMITIAN_REL_TOL * norm.max(f64::MIN_POSITIVE) {
            return Err(Error::NotHermitian {
                defect,
                tol: HERMITIAN_REL_TOL,
            });
        }
        // Symmetrize and force real diagonal.
        let n = m.n();
        let mut h = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let avg = (m.get(i, j) + m.get(j, i).conj()).scale(0.5);
                h.set(i, j, if i == j { T::from_re(avg.re()) } else { avg });
            }
        }
        Ok(Self {
            repr: Repr::Dense(h),
            dim: n,
        })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        Self::from_dense(Matrix::from_rows(rows)?)
    }

    pub fn from_diagonal(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter(
                "diagonal operator must have dimension >= 1".into(),
            ));
        }
        if entries.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFiniteEntry);
        }
        let dim = entries.len();
        Ok(Self {
            repr: Repr::Diagonal(entries),
            dim,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self.repr, Repr::Diagonal(_))
    }

    pub fn diagonal_entries(&self) -> Option<&[f64]> {
        match &self.repr {
            Repr::Diagonal(d) => Some(d),
            Repr::Dense(_) => None,
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> T {
        match &self.repr {
            Repr::Dense(m) => m.get(i, j),
            Repr::Diagonal(d) => {
                if i == j {
                    T::from_re(d[i])
                } else {
                    T::zero()
                }
            }
        }
    }

    /// Materialize as a dense matrix (copy).
    pub fn to_matrix(&self) -> Matrix<T> {
        match &self.repr {
            Repr::Dense(m) => m.clone(),
            Repr::Diagonal(d) => {
                let mut m = Matrix::zeros(self.dim);
                for (i, &v) in d.iter().enumerate() {
                    m.set(i, i, T::from_re(v));
                }
                m
            }
        }
    }

    pub fn apply(&self, v: &Vector<T>) -> Result<Vector<T>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        let out = match &self.repr {
            Repr::Diagonal(d) => v
                .iter()
                .zip(d.iter())
                .map(|(&e, &a)| e.scale(a))
                .collect::<Vec<_>>(),
            Repr::Dense(m) => {
                let n = self.dim;
                let mut out = vec![T::zero(); n];
                for i in 0..n {
                    let mut acc = T::zero();
                    for j in 0..n {
                        acc = acc + m.get(i, j) * v.get(j);
                    }
                    out[i] = acc;
                }
                out
            }
        };
        // Overflow in the product surfaces as a non-finite-entry error.
        Vector::new(out)
    }

    pub fn fro_norm(&self) -> f64 {
        match &self.repr {
            Repr::Dense(m) => m.fro_norm(),
            Repr::Diagonal(d) => d.iter().map(|v| v * v).sum::<f64>().sqrt(),
        }
    }

    /// The operator `-A`.
    pub fn negated(&self) -> Self {
        match &self.repr {
            Repr::Dense(m) => {
                let n = m.n();
                let mut out = Matrix::zeros(n);
                for i in 0..n {
                    for j in 0..n {
                        out.set(i, j, -m.get(i, j));
                    }
                }
                Self {
                    repr: Repr::Dense(out),
                    dim: self.dim,
                }
            }
            Repr::Diagonal(d) => Self {
                repr: Repr::Diagonal(d.iter().map(|v| -v).collect()),
                dim: self.dim,
            },
        }
    }
}

/// Rayleigh quotient <x, Ax> / <x, x>; always real for a Hermitian operator.
pub fn rayleigh_quotient<T: Field>(a: &HermitianOperator<T>, x: &Vector<T>) -> Result<f64> {
    let nsq = x.norm_sq();
    if nsq <= 0.0 {
        return Err(Error::ZeroVector);
    }
    let ax = a.apply(x)?;
    let num = inner(x, &ax)?;
    // The imaginary part is rounding dust for Hermitian data; discard it.
    Ok(num.re() / nsq)
}

/// Residual vector Ax - rho(x) x; orthogonal to x.
pub fn residual<T: Field>(a: &HermitianOperator<T>, x: &Vector<T>) -> Result<Vector<T>> {
    let rho = rayleigh_quotient(a, x)?;
    let ax = a.apply(x)?;
    Ok(ax.sub(&x.scaled(rho)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn rv(values: &[f64]) -> Vector<f64> {
        Vector::from_reals(values).unwrap()
    }

    #[test]
    fn hermitian_constructor_rejects_asymmetric() {
        let m = Matrix::from_rows(vec![vec![1.0, 2.0], vec![3.0, 1.0]]).unwrap();
        assert!(matches!(
            HermitianOperator::from_dense(m).unwrap_err(),
            Error::NotHermitian { .. }
        ));
    }

    #[test]
    fn hermitian_constructor_accepts_and_symmetrizes() {
        let eps = 1e-14;
        let m = Matrix::from_rows(vec![vec![1.0, 2.0 + eps], vec![2.0, 5.0]]).unwrap();
        let a = HermitianOperator::from_dense(m).unwrap();
        assert_eq!(a.entry(0, 1), a.entry(1, 0));
    }

    #[test]
    fn complex_hermitian_diagonal_made_real() {
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let a = HermitianOperator::from_rows(vec![vec![one, i], vec![-i, one.scale(2.0)]]).unwrap();
        assert_eq!(a.entry(0, 0).im, 0.0);
        assert_eq!(a.entry(0, 1), i);
    }

    #[test]
    fn rayleigh_quotient_diag_ones_vector() {
        let a = HermitianOperator::<f64>::from_diagonal(vec![1.0, 0.0, -1.0]).unwrap();
        let y = rv(&[1.0, 1.0, 1.0]);
        assert_eq!(rayleigh_quotient(&a, &y).unwrap(), 0.0);
    }

    #[test]
    fn rayleigh_quotient_identity_is_one() {
        let a = HermitianOperator::<f64>::from_dense(Matrix::identity(4)).unwrap();
        let x = rv(&[0.3, -1.2, 0.0, 2.0]);
        assert!((rayleigh_quotient(&a, &x).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rayleigh_quotient_geometric_truncation() {
        // diag(2^k) against (2^-k): quotient 1.5 / (1 + 2^-n), n = 64.
        let n = 64;
        let a = HermitianOperator::<f64>::from_diagonal(
            (0..n).map(|k| 2.0_f64.powi(k as i32)).collect(),
        )
        .unwrap();
        let y = Vector::from_reals(
            &(0..n).map(|k| 2.0_f64.powi(-(k as i32))).collect::<Vec<_>>(),
        )
        .unwrap();
        let rho = rayleigh_quotient(&a, &y).unwrap();
        assert!((rho - 1.5).abs() <= 1e-12, "rho = {rho}");
    }

    #[test]
    fn residual_of_eigenvector_vanishes() {
        let a = HermitianOperator::<f64>::from_diagonal(vec![3.0, 7.0]).unwrap();
        let r = residual(&a, &rv(&[0.0, 1.0])).unwrap();
        assert_eq!(r.norm(), 0.0);
    }

    #[test]
    fn residual_matches_hand_value() {
        let a = HermitianOperator::<f64>::from_diagonal(vec![1.0, 0.0, -1.0]).unwrap();
        let r = residual(&a, &rv(&[1.0, 1.0, 1.0])).unwrap();
        assert_eq!(r.as_slice(), &[1.0, 0.0, -1.0]);
    }

    #[test]
    fn residual_orthogonal_to_argument() {
        // Fixed 5x5 symmetric matrix; direct arithmetic oracle for <r, y> = 0.
        let rows = vec![
            vec![0.3, -1.1, 0.2, 0.7, -0.5],
            vec![-1.1, 2.0, 0.9, -0.4, 0.1],
            vec![0.2, 0.9, -0.8, 1.3, 0.6],
            vec![0.7, -0.4, 1.3, 0.5, -1.6],
            vec![-0.5, 0.1, 0.6, -1.6, 1.2],
        ];
        let a = HermitianOperator::from_rows(rows).unwrap();
        let y = rv(&[0.9, -0.3, 1.7, 0.2, -1.1]);
        let r = residual(&a, &y).unwrap();
        let dot = inner(&r, &y).unwrap();
        assert!(dot.abs() <= 1e-12 * a.fro_norm() * y.norm_sq());
    }

    #[test]
    fn apply_dimension_checked() {
        let a = HermitianOperator::<f64>::from_diagonal(vec![1.0, 2.0]).unwrap();
        assert!(a.apply(&rv(&[1.0, 2.0, 3.0])).is_err());
    }

    #[test]
    fn zero_vector_rejected() {
        let a = HermitianOperator::<f64>::from_diagonal(vec![1.0, 2.0]).unwrap();
        assert!(matches!(
            rayleigh_quotient(&a, &Vector::zeros(2)).unwrap_err(),
            Error::ZeroVector
        ));
    }
}
