//! Exact perturbation identities for the Rayleigh quotient on the plane
//! spanned by two vectors, and the two-sided tangent/sine enclosures of
//! the quotient change with their sharpness classification.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::operator::{rayleigh_quotient, residual, HermitianOperator};
use crate::restriction::{restrict_2d, TwoDimRestriction};
use crate::scalar::{Field, Scalar};
use crate::vector::{acute_angle, inner, Vector};

/// Ratios are declared real when the imaginary part is below this
/// fraction of the modulus.
pub const REAL_RATIO_REL: f64 = 1e-10;

/// Both cross terms below this fraction of the scale make the sharpness
/// side unknowable.
pub const AMBIGUOUS_REL: f64 = 1e-14;

/// Angles within this guard of a right angle leave the tangent undefined.
pub const RIGHT_ANGLE_GUARD: f64 = 1e-8;

/// Relative residual below which a vector is certified as an eigenvector.
pub const EIGENVECTOR_CERT_REL: f64 = 1e-10;

/// Relative tolerance for plane-membership checks.
pub const MEMBERSHIP_REL: f64 = 1e-10;

/// Common magnitude scale for the tolerance checks of this module:
/// `max(1, |A|_F) * max(1, |x|, |y|)^2`.
pub fn tolerance_scale(a_norm: f64, x_norm: f64, y_norm: f64) -> f64 {
    a_norm.max(1.0) * x_norm.max(y_norm).max(1.0).powi(2)
}

/// Which side of a two-sided enclosure is attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityCase {
    /// The lower enclosure equals the quotient change.
    LowerAttained,
    /// The upper enclosure equals the quotient change.
    UpperAttained,
    /// Both inequalities are strict (possible only over the complex field).
    StrictBoth,
    /// The cross terms are too small to classify a side.
    Unclassified,
}

/// Both sides of the residual-gap identity
/// `[hi - rho(v)] [rho(v) - lo] = |P_S r(v)|^2 / |v|^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualGapIdentity {
    /// Product of the distances from the quotient to the plane eigenvalues.
    pub lhs: f64,
    /// Squared projected-residual norm over the squared vector norm.
    pub rhs: f64,
}

/// Both sides of the double-angle identity
/// `(hi - lo)/2 * sin(2 angle{v, u}) = |P_S r(v)| / |v|`,
/// evaluated with each of the two plane eigenvectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleAngleIdentity {
    pub lhs_via_max: f64,
    pub lhs_via_min: f64,
    pub rhs: f64,
}

/// Two-sided tangent enclosure of `|rho(x) - rho(y)|` together with the
/// cross terms that decide which side is attained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentBoundResult {
    pub lower: f64,
    pub upper: f64,
    /// |rho(x) - rho(y)|
    pub rq_change: f64,
    /// <x, r(y)>
    pub x_dot_residual_y: Scalar,
    /// <r(x), y>
    pub residual_x_dot_y: Scalar,
    /// <x, y>
    pub x_dot_y: Scalar,
    pub equality: EqualityCase,
}

/// Two-sided sine enclosure of `|rho(x) - rho(y)|` with the phase product
/// that decides sharpness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineBoundResult {
    pub lower: f64,
    pub upper: f64,
    pub rq_change: f64,
    /// <x,u_hi><u_lo,x><u_hi,y><y,u_lo> on unit-normalized inputs.
    pub phase_product: Scalar,
    /// The exact factored form `(hi-lo) sin(tx+ty) |sin(tx-ty)|`, which
    /// equals `rq_change` identically.
    pub exact_product: f64,
    /// Worst disagreement between the two eigenvector branches.
    pub branch_gap: f64,
    pub equality: EqualityCase,
}

/// The quotient-error identities available when `x` is an eigenvector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenvectorIdentities {
    /// |lambda - rho(y)|
    pub rq_error: f64,
    /// (hi - lo) sin^2(angle{x, y}); equals `rq_error`.
    pub gap_sin_sq: f64,
    /// (|P_S r(y)| / |y|) tan(angle{x, y}); equals `rq_error` when the
    /// angle is acute.
    pub mixed_tan: Option<f64>,
    /// |P_S r(y)| / (|eta - rho(y)| |y|) where eta is the companion
    /// eigenvalue of the plane; equals tan(angle{x, y}) when defined.
    pub tan_from_residual: Option<f64>,
    pub angle: f64,
}

fn classify_cross_terms<T: Field>(xry: T, rxy: T, scale: f64) -> EqualityCase {
    let floor = AMBIGUOUS_REL * scale;
    let a_abs = xry.abs();
    let b_abs = rxy.abs();
    if a_abs < floor && b_abs < floor {
        return EqualityCase::Unclassified;
    }
    if a_abs < floor || b_abs < floor {
        // One cross term vanishes: the ratio through the other is zero,
        // which counts as nonnegative real.
        return EqualityCase::LowerAttained;
    }
    let ratio = if b_abs >= a_abs { xry / rxy } else { rxy / xry };
    if ratio.im().abs() <= REAL_RATIO_REL * ratio.abs() {
        if ratio.re() >= 0.0 {
            EqualityCase::LowerAttained
        } else {
            EqualityCase::UpperAttained
        }
    } else {
        EqualityCase::StrictBoth
    }
}

fn classify_phase_product<T: Field>(c: T) -> EqualityCase {
    // Computed on unit vectors, so |c| <= 1 and an absolute floor works.
    if c.abs() <= 1e-14 {
        // Vanishing product attains both sides; report the lower branch.
        return EqualityCase::LowerAttained;
    }
    if c.im().abs() <= REAL_RATIO_REL * c.abs() {
        if c.re() >= 0.0 {
            EqualityCase::LowerAttained
        } else {
            EqualityCase::UpperAttained
        }
    } else {
        EqualityCase::StrictBoth
    }
}

fn plane_for_probe<'p, T: Field>(
    plane: &'p TwoDimRestriction<T>,
    probe: &Vector<T>,
) -> Result<&'p TwoDimRestriction<T>> {
    plane.require_member(probe, MEMBERSHIP_REL)?;
    Ok(plane)
}

/// Evaluate the residual-gap identity for a probe inside span{x, y}.
pub fn residual_gap_identity<T: Field>(
    a: &HermitianOperator<T>,
    x: &Vector<T>,
    y: &Vector<T>,
    probe: &Vector<T>,
) -> Result<ResidualGapIdentity> {
    let plane = restrict_2d(a, x, y)?;
    residual_gap_in_plane(a, &plane, probe)
}

/// Same as [`residual_gap_identity`] with a prebuilt plane.
pub fn residual_gap_in_plane<T: Field>(
    a: &HermitianOperator<T>,
    plane: &TwoDimRestriction<T>,
    probe: &Vector<T>,
) -> Result<ResidualGapIdentity> {
    let plane = plane_for_probe(plane, probe)?;
    let rho = rayleigh_quotient(a, probe)?;
    let lhs = (plane.eig_max() - rho) * (rho - plane.eig_min());
    let projected = plane.projected_residual_norm(a, probe)?;
    let rhs = projected * projected / probe.norm_sq();
    Ok(ResidualGapIdentity { lhs, rhs })
}

/// Evaluate the double-angle identity for a probe inside span{x, y}.
pub fn sin2_identity<T: Field>(
    a: &HermitianOperator<T>,
    x: &Vector<T>,
    y: &Vector<T>,
    probe: &Vector<T>,
) -> Result<DoubleAngleIdentity> {
    let plane = restrict_2d(a, x, y)?;
    sin2_in_plane(a, &plane, probe)
}

/// Same as [`sin2_identity`] with a prebuilt plane.
pub fn sin2_in_plane<T: Field>(
    a: &HermitianOperator<T>,
    plane: &TwoDimRestriction<T>,
    probe: &Vector<T>,
) -> Result<DoubleAngleIdentity> {
    let plane = plane_for_probe(plane, probe)?;
    let half_gap = 0.5 * plane.gap();
    let t_hi = acute_angle(probe, plane.vec_max())?;
    let t_lo = acute_angle(probe, plane.vec_min())?;
    let rhs = plane.projected_residual_norm(a, probe)? / probe.norm();
    Ok(DoubleAngleIdentity {
        lhs_via_max: half_gap * (2.0 * t_hi).sin(),
        lhs_via_min: half_gap * (2.0 * t_lo).sin(),
        rhs,
    })
}

/// Tangent enclosure of the quotient change between two vectors with an
/// acute, nonzero angle.
pub fn tangent_bounds<T: Field>(
    a: &HermitianOperator<T>,
    x: &Vector<T>,
    y: &Vector<T>,
) -> Result<TangentBoundResult> {
    let plane = restrict_2d(a, x, y)?; // rejects collinear input
    let angle = acute_angle(x, y)?;
    if angle >= FRAC_PI_2 - RIGHT_ANGLE_GUARD {
        return Err(Error::TangentUndefined { angle });
    }
    let ratio_x = plane.projected_residual_norm(a, x)? / x.norm();
    let ratio_y = plane.projected_residual_norm(a, y)? / y.norm();
    let tangent = angle.tan();
    let rq_change = (rayleigh_quotient(a, x)? - rayleigh_quotient(a, y)?).abs();

    let xry = inner(x, &residual(a, y)?)?;
    let rxy = inner(&residual(a, x)?, y)?;
    let xy = inner(x, y)?;
    let scale = tolerance_scale(a.fro_norm(), x.norm(), y.norm());

    Ok(TangentBoundResult {
        lower: (ratio_x - ratio_y).abs() * tangent,
        upper: (ratio_x + ratio_y) * tangent,
        rq_change,
        x_dot_residual_y: xry.to_scalar(),
        residual_x_dot_y: rxy.to_scalar(),
        x_dot_y: xy.to_scalar(),
        equality: classify_cross_terms(xry, rxy, scale),
    })
}

/// Sine enclosure of the quotient change between two non-collinear vectors.
pub fn sine_bounds<T: Field>(
    a: &HermitianOperator<T>,
    x: &Vector<T>,
    y: &Vector<T>,
) -> Result<SineBoundResult> {
    let plane = restrict_2d(a, x, y)?;
    let gap = plane.gap();
    let sine_xy = acute_angle(x, y)?.sin();
    let rq_change = (rayleigh_quotient(a, x)? - rayleigh_quotient(a, y)?).abs();

    let eval_branch = |u: &Vector<T>| -> Result<(f64, f64, f64)> {
        let tx = acute_angle(x, u)?;
        let ty = acute_angle(y, u)?;
        let lower = gap * (tx - ty).sin().abs() * sine_xy;
        let upper = gap * (tx + ty).sin() * sine_xy;
        let exact = gap * (tx + ty).sin() * (tx - ty).sin().abs();
        Ok((lower, upper, exact))
    };
    let (lower_hi, upper_hi, exact_hi) = eval_branch(plane.vec_max())?;
    let (lower_lo, upper_lo, exact_lo) = eval_branch(plane.vec_min())?;
    let branch_gap = (lower_hi - lower_lo)
        .abs()
        .max((upper_hi - upper_lo).abs())
        .max((exact_hi - exact_lo).abs());

    let xn = x.normalized()?;
    let yn = y.normalized()?;
    let phase = inner(&xn, plane.vec_max())?
        * inner(plane.vec_min(), &xn)?
        * inner(plane.vec_max(), &yn)?
        * inner(&yn, plane.vec_min())?;

    Ok(SineBoundResult {
        lower: lower_hi,
        upper: upper_hi,
        rq_change,
        phase_product: phase.to_scalar(),
        exact_product: exact_hi,
        branch_gap,
        equality: classify_phase_product(phase),
    })
}

/// Identities for the eigenvalue error when `x` is a certified
/// eigenvector and `y` approximates it.
///
/// The tangent forms are reported only where defined: `mixed_tan` needs
/// an acute angle, and `tan_from_residual` needs the companion plane
/// eigenvalue away from `rho(y)`; degenerate planes (both eigenvalues
/// equal) therefore yield `None` there while the sine-squared identity
/// still evaluates.
pub fn eigenvector_identities<T: Field>(
    a: &HermitianOperator<T>,
    x: &Vector<T>,
    y: &Vector<T>,
) -> Result<EigenvectorIdentities> {
    let res_x = residual(a, x)?;
    let relative = res_x.norm() / (a.fro_norm() * x.norm()).max(f64::MIN_POSITIVE);
    if relative > EIGENVECTOR_CERT_REL {
        return Err(Error::NotAnEigenvector { relative });
    }
    let plane = restrict_2d(a, x, y)?;
    let lambda = rayleigh_quotient(a, x)?;
    let rho_y = rayleigh_quotient(a, y)?;
    let rq_error = (lambda - rho_y).abs();
    let angle = acute_angle(x, y)?;
    let gap_sin_sq = plane.gap() * angle.sin().powi(2);

    let projected_ratio = plane.projected_residual_norm(a, y)? / y.norm();
    let mixed_tan = (angle < FRAC_PI_2 - RIGHT_ANGLE_GUARD).then(|| projected_ratio * angle.tan());

    // Companion eigenvalue: the plane eigenvalue away from lambda.
    let eta = if (plane.eig_max() - lambda).abs() <= (plane.eig_min() - lambda).abs() {
        plane.eig_min()
    } else {
        plane.eig_max()
    };
    let eta_dist = (eta - rho_y).abs();
    let tan_from_residual =
        (eta_dist > 1e-12 * eta.abs().max(rho_y.abs()).max(1.0)).then(|| projected_ratio / eta_dist);

    Ok(EigenvectorIdentities {
        rq_error,
        gap_sin_sq,
        mixed_tan,
        tan_from_residual,
        angle,
    })
}
