//! Scalar field abstraction: every kernel is generic over `f64` (real
//! Hilbert space) and `Complex64` (complex Hilbert space), and the
//! [`Scalar`] tagged union carries field-independent values in results.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

/// Binary64 scalar of either field, used in result records where the
/// carrier field has been erased.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scalar {
    Real(f64),
    Complex(Complex64),
}

impl Scalar {
    pub fn re(self) -> f64 {
        match self {
            Scalar::Real(v) => v,
            Scalar::Complex(z) => z.re,
        }
    }

    pub fn im(self) -> f64 {
        match self {
            Scalar::Real(_) => 0.0,
            Scalar::Complex(z) => z.im,
        }
    }

    pub fn abs(self) -> f64 {
        match self {
            Scalar::Real(v) => v.abs(),
            Scalar::Complex(z) => z.norm(),
        }
    }

    pub fn is_finite(self) -> bool {
        match self {
            Scalar::Real(v) => v.is_finite(),
            Scalar::Complex(z) => z.re.is_finite() && z.im.is_finite(),
        }
    }
}

impl Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Real(v) => write!(f, "{v}"),
            Scalar::Complex(z) => write!(f, "{z}"),
        }
    }
}

/// The scalar field of the ambient Hilbert space.
///
/// Implemented for `f64` and `Complex64`. Inner products are
/// conjugate-linear in the first argument, so `conj` is the only
/// field-specific piece the kernels need beyond arithmetic.
pub trait Field:
    Copy
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const IS_COMPLEX: bool;

    fn zero() -> Self;
    fn one() -> Self;
    /// Embed a real number into the field.
    fn from_re(re: f64) -> Self;
    fn conj(self) -> Self;
    fn re(self) -> f64;
    fn im(self) -> f64;
    /// Modulus |z|.
    fn abs(self) -> f64;
    /// Squared modulus |z|^2, without the square root.
    fn abs_sq(self) -> f64;
    /// Multiply by a real factor.
    fn scale(self, factor: f64) -> Self;
    fn is_finite(self) -> bool;
    fn to_scalar(self) -> Scalar;
}

impl Field for f64 {
    const IS_COMPLEX: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_re(re: f64) -> Self {
        re
    }
    fn conj(self) -> Self {
        self
    }
    fn re(self) -> f64 {
        self
    }
    fn im(self) -> f64 {
        0.0
    }
    fn abs(self) -> f64 {
        f64::abs(self)
    }
    fn abs_sq(self) -> f64 {
        self * self
    }
    fn scale(self, factor: f64) -> Self {
        self * factor
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    fn to_scalar(self) -> Scalar {
        Scalar::Real(self)
    }
}

impl Field for Complex64 {
    const IS_COMPLEX: bool = true;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_re(re: f64) -> Self {
        Complex64::new(re, 0.0)
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    fn re(self) -> f64 {
        self.re
    }
    fn im(self) -> f64 {
        self.im
    }
    fn abs(self) -> f64 {
        self.norm()
    }
    fn abs_sq(self) -> f64 {
        self.norm_sqr()
    }
    fn scale(self, factor: f64) -> Self {
        Complex64::new(self.re * factor, self.im * factor)
    }
    fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn to_scalar(self) -> Scalar {
        Scalar::Complex(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_accessors() {
        let r = Scalar::Real(-2.0);
        assert_eq!(r.re(), -2.0);
        assert_eq!(r.im(), 0.0);
        assert_eq!(r.abs(), 2.0);

        let z = Scalar::Complex(Complex64::new(3.0, 4.0));
        assert_eq!(z.abs(), 5.0);
        assert!(z.is_finite());
        assert!(!Scalar::Real(f64::NAN).is_finite());
    }

    #[test]
    fn field_conjugation() {
        let z = Complex64::new(1.0, -2.0);
        assert_eq!(Field::conj(z), Complex64::new(1.0, 2.0));
        assert_eq!(Field::conj(3.5_f64), 3.5);
        assert_eq!(z.abs_sq(), 5.0);
    }
}
