//! Restriction of a Hermitian operator to the plane spanned by two vectors:
//! orthonormal basis, the 2x2 restricted matrix, and its eigenpairs.

use crate::error::{Error, Result};
use crate::operator::{residual, HermitianOperator};
use crate::scalar::Field;
use crate::vector::{inner, Vector};

/// Vectors with sine of the mutual angle below this are declared collinear.
pub const COLLINEAR_SIN_TOL: f64 = 1e-12;

/// Gram-Schmidt rejection threshold: if the orthogonalized second vector
/// retains less than this fraction of its norm, the plane is degenerate.
pub const GRAM_SCHMIDT_DROP_REL: f64 = 1e-8;

/// Closed-form eigensolve of a 2x2 Hermitian matrix.
///
/// Returns eigenvalues `(hi, lo)` and unit eigenvector coordinates
/// `(for hi, for lo)`. The eigenvalue farther from `h[0][0]` is computed
/// from the discriminant; the other comes from the trace, which avoids
/// cancellation in the near one.
pub(crate) fn eigen_2x2_hermitian<T: Field>(h: &[[T; 2]; 2]) -> ((f64, f64), ([T; 2], [T; 2])) {
    let a = h[0][0].re();
    let d = h[1][1].re();
    let b = h[0][1];
    let b_abs = b.abs();
    let half_diff = 0.5 * (a - d);
    let disc = f64::hypot(half_diff, b_abs);
    let mid = 0.5 * (a + d);
    let trace = a + d;

    // Eigenvalue farther from a = h[0][0].
    let far = if half_diff >= 0.0 { mid - disc } else { mid + disc };
    let near = trace - far;
    let (hi, lo) = if far >= near { (far, near) } else { (near, far) };

    if b_abs == 0.0 {
        // Already diagonal; eigenvectors are the coordinate directions.
        let e0 = [T::one(), T::zero()];
        let e1 = [T::zero(), T::one()];
        let (vec_hi, vec_lo) = if a >= d { (e0, e1) } else { (e1, e0) };
        return ((hi, lo), (vec_hi, vec_lo));
    }

    // Eigenvector for hi from whichever null-space formula has the larger
    // pivot; the lo eigenvector is its exact orthogonal complement.
    let vec_hi = if (hi - a).abs() >= (hi - d).abs() {
        [b, T::from_re(hi - a)]
    } else {
        [T::from_re(hi - d), b.conj()]
    };
    let norm = (vec_hi[0].abs_sq() + vec_hi[1].abs_sq()).sqrt();
    let vec_hi = [vec_hi[0].scale(1.0 / norm), vec_hi[1].scale(1.0 / norm)];
    let vec_lo = [-vec_hi[1].conj(), vec_hi[0].conj()];
    ((hi, lo), (vec_hi, vec_lo))
}

/// The plane S = span{x, y} with the restricted operator's data:
/// orthonormal basis, 2x2 matrix, and its eigenpairs lifted to ambient
/// space.
#[derive(Debug, Clone)]
pub struct TwoDimRestriction<T: Field> {
    q1: Vector<T>,
    q2: Vector<T>,
    h: [[T; 2]; 2],
    eig_max: f64,
    eig_min: f64,
    vec_max: Vector<T>,
    vec_min: Vector<T>,
}

/// Restrict `a` to span{x, y}.
///
/// The basis comes from normalizing `x` and Gram-Schmidt-orthogonalizing
/// `y` against it (one reorthogonalization pass); collinear inputs are
/// rejected. The restricted matrix is solved in closed form and its
/// eigenvectors are lifted back to the ambient space.
pub fn restrict_2d<T: Field>(
    a: &HermitianOperator<T>,
    x: &Vector<T>,
    y: &Vector<T>,
) -> Result<TwoDimRestriction<T>> {
    if x.len() != a.dim() || y.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: if x.len() != a.dim() { x.len() } else { y.len() },
        });
    }
    let ny = y.norm();
    if ny <= 0.0 {
        return Err(Error::ZeroVector);
    }
    let q1 = x.normalized()?;

    let mut w = y.axpy(-inner(&q1, y)?, &q1);
    // The first subtraction measures the sine of the angle reliably even
    // when arccos cannot resolve it.
    let sine_estimate = w.norm() / ny;
    if sine_estimate < COLLINEAR_SIN_TOL.max(GRAM_SCHMIDT_DROP_REL) {
        return Err(Error::CollinearVectors);
    }
    w = w.axpy(-inner(&q1, &w)?, &q1);
    let q2 = w.normalized()?;

    let aq1 = a.apply(&q1)?;
    let aq2 = a.apply(&q2)?;
    let h11 = T::from_re(inner(&q1, &aq1)?.re());
    let h22 = T::from_re(inner(&q2, &aq2)?.re());
    // Hermitize the off-diagonal pair.
    let h12 = (inner(&q1, &aq2)? + inner(&q2, &aq1)?.conj()).scale(0.5);
    let h = [[h11, h12], [h12.conj(), h22]];

    let ((hi, lo), (chi, clo)) = eigen_2x2_hermitian(&h);
    let lift = |c: &[T; 2]| q1.mul_scalar(c[0]).add(&q2.mul_scalar(c[1]));
    Ok(TwoDimRestriction {
        vec_max: lift(&chi),
        vec_min: lift(&clo),
        q1,
        q2,
        h,
        eig_max: hi,
        eig_min: lo,
    })
}

impl<T: Field> TwoDimRestriction<T> {
    pub fn basis(&self) -> (&Vector<T>, &Vector<T>) {
        (&self.q1, &self.q2)
    }

    pub fn matrix(&self) -> &[[T; 2]; 2] {
        &self.h
    }

    /// Largest eigenvalue of the restricted operator.
    pub fn eig_max(&self) -> f64 {
        self.eig_max
    }

    /// Smallest eigenvalue of the restricted operator.
    pub fn eig_min(&self) -> f64 {
        self.eig_min
    }

    /// Spread between the restricted eigenvalues.
    pub fn gap(&self) -> f64 {
        self.eig_max - self.eig_min
    }

    /// Ambient unit eigenvector for the largest eigenvalue.
    pub fn vec_max(&self) -> &Vector<T> {
        &self.vec_max
    }

    /// Ambient unit eigenvector for the smallest eigenvalue.
    pub fn vec_min(&self) -> &Vector<T> {
        &self.vec_min
    }

    /// Coordinates of `v` in the orthonormal basis (ignores any component
    /// outside the plane).
    pub fn coords(&self, v: &Vector<T>) -> Result<[T; 2]> {
        Ok([inner(&self.q1, v)?, inner(&self.q2, v)?])
    }

    /// Orthogonal projection of `v` onto the plane.
    pub fn project(&self, v: &Vector<T>) -> Result<Vector<T>> {
        let c = self.coords(v)?;
        Ok(self.lift(&c))
    }

    /// Rebuild the ambient vector with plane coordinates `c`.
    pub fn lift(&self, c: &[T; 2]) -> Vector<T> {
        self.q1.mul_scalar(c[0]).add(&self.q2.mul_scalar(c[1]))
    }

    /// Norm of the component of `v` outside the plane.
    pub fn outside_norm(&self, v: &Vector<T>) -> Result<f64> {
        let p = self.project(v)?;
        Ok(v.sub(&p).norm())
    }

    /// Require `v` to lie in the plane up to `rel_tol * |v|`.
    pub fn require_member(&self, v: &Vector<T>, rel_tol: f64) -> Result<()> {
        let norm = v.norm();
        if norm <= 0.0 {
            return Err(Error::ZeroVector);
        }
        let outside = self.outside_norm(v)?;
        if outside > rel_tol * norm {
            return Err(Error::OutsideSubspace { outside, norm });
        }
        Ok(())
    }

    /// Apply the restricted operator to a plane member (result stays in
    /// the plane).
    pub fn apply_in_plane(&self, v: &Vector<T>) -> Result<Vector<T>> {
        let c = self.coords(v)?;
        let hc = [
            self.h[0][0] * c[0] + self.h[0][1] * c[1],
            self.h[1][0] * c[0] + self.h[1][1] * c[1],
        ];
        Ok(self.lift(&hc))
    }

    /// Rayleigh quotient of a plane member computed entirely from the 2x2
    /// data; agrees with the ambient quotient for members of the plane.
    pub fn rq_in_plane(&self, v: &Vector<T>) -> Result<f64> {
        let c = self.coords(v)?;
        let nsq = c[0].abs_sq() + c[1].abs_sq();
        if nsq <= 0.0 {
            return Err(Error::ZeroVector);
        }
        let hc0 = self.h[0][0] * c[0] + self.h[0][1] * c[1];
        let hc1 = self.h[1][0] * c[0] + self.h[1][1] * c[1];
        let num = (c[0].conj() * hc0 + c[1].conj() * hc1).re();
        Ok(num / nsq)
    }

    /// Residual of a plane member with respect to the restricted operator,
    /// computed in the 2x2 representation and lifted back.
    pub fn residual_in_plane(&self, v: &Vector<T>) -> Result<Vector<T>> {
        let rho = self.rq_in_plane(v)?;
        let av = self.apply_in_plane(v)?;
        let p = self.project(v)?;
        Ok(av.sub(&p.scaled(rho)))
    }

    /// Norm of the projected residual |P_S r(v)| computed by the direct
    /// route: ambient residual, then projection.
    pub fn projected_residual_norm(
        &self,
        a: &HermitianOperator<T>,
        v: &Vector<T>,
    ) -> Result<f64> {
        let r = residual(a, v)?;
        Ok(self.project(&r)?.norm())
    }

    pub fn orthonormal_defect(&self) -> f64 {
        let n11 = (self.q1.norm_sq() - 1.0).abs();
        let n22 = (self.q2.norm_sq() - 1.0).abs();
        let cross = inner(&self.q1, &self.q2).expect("same dims").abs();
        n11.max(n22).max(cross)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::rayleigh_quotient;
    use crate::vector::acute_angle;
    use num_complex::Complex64;

    fn rv(values: &[f64]) -> Vector<f64> {
        Vector::from_reals(values).unwrap()
    }

    fn geometric_pair(n: usize) -> (HermitianOperator<f64>, Vector<f64>, Vector<f64>) {
        let a = HermitianOperator::from_diagonal(
            (0..n).map(|k| 2.0_f64.powi(k as i32)).collect(),
        )
        .unwrap();
        let x = Vector::basis(n, 0);
        let y = Vector::from_reals(
            &(0..n).map(|k| 2.0_f64.powi(-(k as i32))).collect::<Vec<_>>(),
        )
        .unwrap();
        (a, x, y)
    }

    #[test]
    fn geometric_example_eigenvalues() {
        let (a, x, y) = geometric_pair(64);
        let r = restrict_2d(&a, &x, &y).unwrap();
        assert!((r.eig_max() - 3.0).abs() <= 1e-12, "hi = {}", r.eig_max());
        assert!((r.eig_min() - 1.0).abs() <= 1e-12, "lo = {}", r.eig_min());
    }

    #[test]
    fn identity_restriction_is_flat() {
        let a = HermitianOperator::<f64>::from_diagonal(vec![1.0; 3]).unwrap();
        let r = restrict_2d(&a, &rv(&[1.0, 2.0, 0.5]), &rv(&[0.0, 1.0, -1.0])).unwrap();
        assert!((r.eig_max() - 1.0).abs() < 1e-14);
        assert!((r.eig_min() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn vanishing_restriction() {
        // diag(1,0,-1) restricted to span{(0,1,0),(1,1,1)}: the 2x2 matrix
        // vanishes identically (q2 = (1,0,1)/sqrt(2)).
        let a = HermitianOperator::<f64>::from_diagonal(vec![1.0, 0.0, -1.0]).unwrap();
        let r = restrict_2d(&a, &rv(&[0.0, 1.0, 0.0]), &rv(&[1.0, 1.0, 1.0])).unwrap();
        for row in r.matrix() {
            for e in row {
                assert!(e.abs() <= 1e-15);
            }
        }
        assert_eq!(r.eig_max(), 0.0);
        assert_eq!(r.eig_min(), 0.0);
    }

    #[test]
    fn basis_and_eigenvectors_are_orthonormal() {
        let rows = vec![
            vec![1.2, -0.3, 0.8, 0.1],
            vec![-0.3, 0.4, -0.6, 0.9],
            vec![0.8, -0.6, -1.1, 0.2],
            vec![0.1, 0.9, 0.2, 2.0],
        ];
        let a = HermitianOperator::from_rows(rows).unwrap();
        let x = rv(&[1.0, -0.5, 0.25, 2.0]);
        let y = rv(&[0.1, 1.4, -0.7, 0.3]);
        let r = restrict_2d(&a, &x, &y).unwrap();
        assert!(r.orthonormal_defect() <= 1e-12);
        assert!(inner(r.vec_max(), r.vec_min()).unwrap().abs() <= 1e-12);
        assert!((r.vec_max().norm() - 1.0).abs() <= 1e-12);
        // trace and determinant consistency
        let trace = r.matrix()[0][0].re() + r.matrix()[1][1].re();
        let det = r.matrix()[0][0].re() * r.matrix()[1][1].re() - r.matrix()[0][1].abs_sq();
        assert!((r.eig_max() + r.eig_min() - trace).abs() <= 1e-12 * trace.abs().max(1.0));
        assert!((r.eig_max() * r.eig_min() - det).abs() <= 1e-12 * det.abs().max(1.0));
        // eigenvectors stay inside the plane
        assert!(r.outside_norm(r.vec_max()).unwrap() <= 1e-12);
        assert!(r.outside_norm(r.vec_min()).unwrap() <= 1e-12);
    }

    #[test]
    fn plane_quotient_and_residual_agree_with_ambient() {
        let rows = vec![
            vec![0.5, 1.0, -0.2],
            vec![1.0, -0.7, 0.4],
            vec![-0.2, 0.4, 1.3],
        ];
        let a = HermitianOperator::from_rows(rows).unwrap();
        let x = rv(&[1.0, 0.2, -0.4]);
        let y = rv(&[-0.3, 1.0, 0.8]);
        let r = restrict_2d(&a, &x, &y).unwrap();
        let probe = x.scaled(0.37).add(&y.scaled(-1.21));
        // Rayleigh quotient through the plane equals the ambient one.
        let direct = rayleigh_quotient(&a, &probe).unwrap();
        let via_plane = r.rq_in_plane(&probe).unwrap();
        assert!((direct - via_plane).abs() <= 1e-10 * direct.abs().max(1.0));
        // Projected residual equals the in-plane residual.
        let projected = r.project(&residual(&a, &probe).unwrap()).unwrap();
        let in_plane = r.residual_in_plane(&probe).unwrap();
        assert!(projected.sub(&in_plane).norm() <= 1e-10 * a.fro_norm() * probe.norm());
    }

    #[test]
    fn eigenvector_of_ambient_is_eigenvector_of_plane() {
        let a = HermitianOperator::<f64>::from_diagonal(vec![2.0, -1.0, 0.5]).unwrap();
        let x = Vector::basis(3, 1); // eigenvector, eigenvalue -1
        let y = rv(&[1.0, 1.0, 0.0]);
        let r = restrict_2d(&a, &x, &y).unwrap();
        let hx = r.apply_in_plane(&x).unwrap();
        let lam = rayleigh_quotient(&a, &x).unwrap();
        assert!(hx.sub(&x.scaled(lam)).norm() <= 1e-10 * a.fro_norm());
    }

    #[test]
    fn angle_identities_in_plane() {
        let rows = vec![
            vec![1.0, 0.3, -0.5],
            vec![0.3, -0.2, 0.7],
            vec![-0.5, 0.7, 0.9],
        ];
        let a = HermitianOperator::from_rows(rows).unwrap();
        let x = rv(&[0.6, -1.0, 0.4]);
        let y = rv(&[1.1, 0.5, -0.2]);
        let r = restrict_2d(&a, &x, &y).unwrap();
        let probe = x.scaled(1.3).add(&y.scaled(0.4));
        let rho = rayleigh_quotient(&a, &probe).unwrap();
        let t1 = acute_angle(&probe, r.vec_max()).unwrap();
        let t2 = acute_angle(&probe, r.vec_min()).unwrap();
        // gap-weighted sine-squared split of the quotient
        let gap = r.gap();
        assert!((r.eig_max() - rho - gap * t1.sin().powi(2)).abs() <= 1e-10 * gap.max(1.0));
        assert!((rho - r.eig_min() - gap * t2.sin().powi(2)).abs() <= 1e-10 * gap.max(1.0));
        // complementary angles to the two eigenvectors
        assert!((t1.cos() - t2.sin()).abs() <= 1e-12);
        assert!(((2.0 * t1).sin() - (2.0 * t2).sin()).abs() <= 1e-12);
    }

    #[test]
    fn cross_ratio_tangent_identity() {
        // |<r(x), y>| / |<x, y>| = (|P_S r(x)| / |x|) tan(angle)
        let rows = vec![
            vec![0.2, 0.9, 0.1, -0.4],
            vec![0.9, 1.5, -0.3, 0.6],
            vec![0.1, -0.3, -0.9, 0.2],
            vec![-0.4, 0.6, 0.2, 0.7],
        ];
        let a = HermitianOperator::from_rows(rows).unwrap();
        let x = rv(&[1.0, 0.1, -0.6, 0.4]);
        let y = rv(&[0.2, -0.8, 0.5, 1.0]);
        let r = restrict_2d(&a, &x, &y).unwrap();
        let angle = acute_angle(&x, &y).unwrap();
        let lhs = inner(&residual(&a, &x).unwrap(), &y).unwrap().abs()
            / inner(&x, &y).unwrap().abs();
        let rhs = r.projected_residual_norm(&a, &x).unwrap() / x.norm() * angle.tan();
        assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1.0));
    }

    #[test]
    fn collinear_inputs_rejected() {
        let a = HermitianOperator::<f64>::from_diagonal(vec![1.0, 2.0, 3.0]).unwrap();
        let x = rv(&[1.0, 2.0, 3.0]);
        assert!(matches!(
            restrict_2d(&a, &x, &x.scaled(-2.0)).unwrap_err(),
            Error::CollinearVectors
        ));
        // nearly collinear
        let y = x.add(&rv(&[1e-12, 0.0, 0.0]));
        assert!(restrict_2d(&a, &x, &y).is_err());
    }

    #[test]
    fn complex_plane_restriction() {
        let i = Complex64::new(0.0, 1.0);
        let o = Complex64::new(1.0, 0.0);
        let z = Complex64::new(0.0, 0.0);
        let a = HermitianOperator::from_rows(vec![
            vec![o * 2.0, i, z],
            vec![-i, o, i * 0.5],
            vec![z, -i * 0.5, -o],
        ])
        .unwrap();
        let x = Vector::new(vec![o, i * 0.5, z]).unwrap();
        let y = Vector::new(vec![z, o, i]).unwrap();
        let r = restrict_2d(&a, &x, &y).unwrap();
        assert!(r.orthonormal_defect() <= 1e-12);
        assert!(r.eig_max() >= r.eig_min());
        let probe = x.mul_scalar(Complex64::new(0.3, -0.7)).add(&y);
        let direct = rayleigh_quotient(&a, &probe).unwrap();
        assert!((direct - r.rq_in_plane(&probe).unwrap()).abs() <= 1e-10);
    }

    #[test]
    fn two_by_two_solver_avoids_cancellation() {
        // Nearly degenerate pair: trace/det identities must survive.
        let h = [[1.0_f64, 1e-9], [1e-9, 1.0 + 2e-9]];
        let ((hi, lo), (vhi, vlo)) = eigen_2x2_hermitian(&h);
        assert!((hi + lo - (h[0][0] + h[1][1])).abs() <= 1e-15 * 2.0);
        let det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
        assert!((hi * lo - det).abs() <= 1e-12 * det.abs().max(1.0));
        let dot: f64 = vhi[0] * vlo[0] + vhi[1] * vlo[1];
        assert!(dot.abs() <= 1e-15);
    }
}
