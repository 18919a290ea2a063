//! Dense finite-dimensional vectors, inner products and acute angles.

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Dense vector over the scalar field `T`, length >= 1, finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<T: Field> {
    entries: Vec<T>,
}

impl<T: Field> Vector<T> {
    /// Build a vector, rejecting empty sequences and non-finite entries.
    pub fn new(entries: Vec<T>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter("vector must have length >= 1".into()));
        }
        if entries.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFiniteEntry);
        }
        Ok(Self { entries })
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            entries: vec![T::zero(); len],
        }
    }

    /// Coordinate vector with a one in position `index`.
    pub fn basis(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.entries[index] = T::one();
        v
    }

    pub fn from_reals(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| T::from_re(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.entries.iter()
    }

    pub fn get(&self, index: usize) -> T {
        self.entries[index]
    }

    pub fn norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.abs_sq())
            .sum::<f64>()
            .sqrt()
    }

    pub fn norm_sq(&self) -> f64 {
        self.entries.iter().map(|e| e.abs_sq()).sum()
    }

    /// Unit vector in the same direction; errors on (numerically) zero input.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n <= 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(self.scaled(1.0 / n))
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            entries: self.entries.iter().map(|e| e.scale(factor)).collect(),
        }
    }

    pub fn mul_scalar(&self, factor: T) -> Self {
        Self {
            entries: self.entries.iter().map(|&e| e * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Self {
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Self {
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    /// `self + coeff * other`.
    pub fn axpy(&self, coeff: T, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Self {
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(&a, &b)| a + b * coeff)
                .collect(),
        }
    }
}

impl<T: Field> From<Vector<T>> for Vec<T> {
    fn from(v: Vector<T>) -> Self {
        v.entries
    }
}

/// Inner product, conjugate-linear in the first argument and linear in
/// the second; `inner(x, x)` is real and nonnegative.
pub fn inner<T: Field>(x: &Vector<T>, y: &Vector<T>) -> Result<T> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter()
        .zip(y.iter())
        .fold(T::zero(), |acc, (&a, &b)| acc + a.conj() * b))
}

/// Acute angle between two nonzero vectors, in [0, pi/2].
///
/// Computed as arccos(|<x,y>| / (|x| |y|)) with the argument clamped to
/// [0, 1] before the arccosine.
pub fn acute_angle<T: Field>(x: &Vector<T>, y: &Vector<T>) -> Result<f64> {
    let nx = x.norm();
    let ny = y.norm();
    if nx <= 0.0 || ny <= 0.0 {
        return Err(Error::ZeroVector);
    }
    let c = inner(x, y)?.abs() / (nx * ny);
    Ok(c.clamp(0.0, 1.0).acos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use std::f64::consts::FRAC_PI_2;

    fn rv(values: &[f64]) -> Vector<f64> {
        Vector::from_reals(values).unwrap()
    }

    #[test]
    fn inner_orthogonal_axes() {
        assert_eq!(inner(&rv(&[1.0, 0.0]), &rv(&[0.0, 1.0])).unwrap(), 0.0);
    }

    #[test]
    fn inner_residual_perpendicular_instance() {
        // (1,1,1) against (1,0,-1)
        let x = rv(&[1.0, 1.0, 1.0]);
        let y = rv(&[1.0, 0.0, -1.0]);
        assert_eq!(inner(&x, &y).unwrap(), 0.0);
    }

    #[test]
    fn inner_unit_imaginary() {
        let i = Complex64::new(0.0, 1.0);
        let z = Vector::new(vec![i, Complex64::new(0.0, 0.0)]).unwrap();
        let p = inner(&z, &z).unwrap();
        assert_eq!(p, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn inner_sesquilinearity() {
        let x = Vector::new(vec![Complex64::new(1.0, 2.0), Complex64::new(-1.0, 0.5)]).unwrap();
        let y = Vector::new(vec![Complex64::new(0.5, -1.0), Complex64::new(2.0, 1.0)]).unwrap();
        let c = Complex64::new(0.7, -0.3);
        let lhs = inner(&x.mul_scalar(c), &y).unwrap();
        let rhs = Field::conj(c) * inner(&x, &y).unwrap();
        assert!((lhs - rhs).norm() < 1e-15);
        let lhs2 = inner(&x, &y.mul_scalar(c)).unwrap();
        let rhs2 = c * inner(&x, &y).unwrap();
        assert!((lhs2 - rhs2).norm() < 1e-15);
        // <x,x> real nonnegative
        let xx = inner(&x, &x).unwrap();
        assert!(xx.im.abs() < 1e-15 && xx.re >= 0.0);
    }

    #[test]
    fn inner_length_mismatch() {
        let e = inner(&rv(&[1.0]), &rv(&[1.0, 2.0])).unwrap_err();
        assert!(matches!(e, Error::DimensionMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn angle_same_and_orthogonal() {
        let x = rv(&[3.0, 4.0]);
        assert_eq!(acute_angle(&x, &x).unwrap(), 0.0);
        let a = acute_angle(&rv(&[1.0, 0.0]), &rv(&[0.0, 2.0])).unwrap();
        assert_eq!(a, FRAC_PI_2);
    }

    #[test]
    fn angle_sin_sq_two_thirds() {
        // angle between (0,1,0) and (1,1,1): cos = 1/sqrt(3), sin^2 = 2/3
        let a = acute_angle(&rv(&[0.0, 1.0, 0.0]), &rv(&[1.0, 1.0, 1.0])).unwrap();
        assert!((a.sin().powi(2) - 2.0 / 3.0).abs() < 1e-15);
        assert!((a - (1.0 / 3.0_f64.sqrt()).acos()).abs() < 1e-15);
    }

    #[test]
    fn angle_zero_vector_rejected() {
        let z = Vector::<f64>::zeros(2);
        assert!(matches!(
            acute_angle(&z, &rv(&[1.0, 0.0])).unwrap_err(),
            Error::ZeroVector
        ));
    }

    #[test]
    fn constructor_validation() {
        assert!(Vector::<f64>::new(vec![]).is_err());
        assert!(Vector::new(vec![f64::NAN]).is_err());
        assert!(Vector::new(vec![f64::INFINITY, 1.0]).is_err());
    }
}
