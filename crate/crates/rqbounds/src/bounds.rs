//! Catalogue of computable eigenvalue and eigenvector error bounds:
//! the classical residual-based family (Temple, Kato-Temple, gap,
//! Krylov-Weinstein), their sharper projected-residual versions, and the
//! eigenvector angle bounds. Every bound is evaluated on both sides and
//! returned as a structured report.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::identities::{EIGENVECTOR_CERT_REL, RIGHT_ANGLE_GUARD};
use crate::operator::{rayleigh_quotient, residual, HermitianOperator};
use crate::projection::{project_onto_orthonormal, project_onto_span};
use crate::restriction::{restrict_2d, TwoDimRestriction};
use crate::scalar::Field;
use crate::spectral::{
    eigendecompose, invariant_subspace_above, spectrum_context, SpectralDecomposition,
    SpectrumContext,
};
use crate::vector::{acute_angle, Vector};

/// Relative tolerance for the `holds` / `equality` flags, scaled by the
/// report's own magnitudes.
pub const BOUND_FLAG_REL: f64 = 1e-10;

/// One evaluated bound: the certified quantity, the bound value, the
/// verdicts, and every named intermediate that went into them.
///
/// `holds` uses `lhs <= rhs + tol` with `tol = 1e-10 * max(1, |lhs|,
/// |rhs|)`; a false value is a certification failure. For the two-sided
/// Kato-Temple interval, `lhs` is the signed error `rho - lambda`, `rhs`
/// is the upper endpoint, and `holds` is interval membership (the lower
/// endpoint is in `ingredients`).
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub bound_name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub equality: bool,
    pub ingredients: BTreeMap<&'static str, f64>,
}

fn flag_tol(lhs: f64, rhs: f64) -> f64 {
    BOUND_FLAG_REL * lhs.abs().max(rhs.abs()).max(1.0)
}

fn make_report(
    bound_name: &'static str,
    lhs: f64,
    rhs: f64,
    ingredients: BTreeMap<&'static str, f64>,
) -> BoundReport {
    let tol = flag_tol(lhs, rhs);
    BoundReport {
        bound_name,
        lhs,
        rhs,
        holds: lhs <= rhs + tol,
        equality: (lhs - rhs).abs() <= tol,
        ingredients,
    }
}

/// A catalogue entry: either an evaluated report or a skip record for a
/// bound whose hypotheses the input does not satisfy.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundOutcome {
    Ran(BoundReport),
    Skipped {
        bound_name: &'static str,
        reason: String,
    },
}

impl BoundOutcome {
    pub fn bound_name(&self) -> &'static str {
        match self {
            BoundOutcome::Ran(r) => r.bound_name,
            BoundOutcome::Skipped { bound_name, .. } => bound_name,
        }
    }

    pub fn report(&self) -> Option<&BoundReport> {
        match self {
            BoundOutcome::Ran(r) => Some(r),
            BoundOutcome::Skipped { .. } => None,
        }
    }
}

fn certify_eigenvector<T: Field>(a: &HermitianOperator<T>, x: &Vector<T>) -> Result<f64> {
    let r = residual(a, x)?;
    let relative = r.norm() / (a.fro_norm() * x.norm()).max(f64::MIN_POSITIVE);
    if relative > EIGENVECTOR_CERT_REL {
        return Err(Error::NotAnEigenvector { relative });
    }
    rayleigh_quotient(a, x)
}

/// A priori bound: the eigenvalue error is at most the spectral spread
/// times the squared sine of the angle to the eigenvector.
pub fn apriori_sin2<T: Field>(
    a: &HermitianOperator<T>,
    x: &Vector<T>,
    y: &Vector<T>,
    dec: &SpectralDecomposition<T>,
) -> Result<BoundReport> {
    let lambda = certify_eigenvector(a, x)?;
    let rho = rayleigh_quotient(a, y)?;
    let angle = acute_angle(x, y)?;
    let spread = dec.max_eigenvalue() - dec.min_eigenvalue();
    let lhs = (lambda - rho).abs();
    let rhs = spread * angle.sin().powi(2);
    // The exact two-dimensional intermediate; collapses to zero when the
    // vectors are collinear.
    let plane_gap_sin_sq = match restrict_2d(a, x, y) {
        Ok(plane) => plane.gap() * angle.sin().powi(2),
        Err(Error::CollinearVectors) => 0.0,
        Err(e) => return Err(e),
    };
    let mut ing = BTreeMap::new();
    ing.insert("rho", rho);
    ing.insert("lambda", lambda);
    ing.insert("theta", angle);
    ing.insert("spectral_spread", spread);
    ing.insert("plane_gap_sin_sq", plane_gap_sin_sq);
    Ok(make_report("apriori_sin2", lhs, rhs, ing))
}

/// Mixed bound: residual norm times the tangent of the angle to the
/// eigenvector. Equality holds exactly when the plane span{x, y} is
/// invariant, which the report checks via the projection defect.
pub fn mixed_tan<T: Field>(
    a: &HermitianOperator<T>,
    x: &Vector<T>,
    y: &Vector<T>,
) -> Result<BoundReport> {
    let lambda = certify_eigenvector(a, x)?;
    let rho = rayleigh_quotient(a, y)?;
    let angle = acute_angle(x, y)?;
    if angle >= FRAC_PI_2 - RIGHT_ANGLE_GUARD {
        return Err(Error::TangentUndefined { angle });
    }
    let r = residual(a, y)?;
    let lhs = (lambda - rho).abs();
    let rhs = r.norm() / y.norm() * angle.tan();

    let (invariance_defect, projected_ratio) = match restrict_2d(a, x, y) {
        Ok(plane) => {
            let pr = plane.project(&r)?;
            (r.sub(&pr).norm(), pr.norm() / y.norm())
        }
        Err(Error::CollinearVectors) => (r.norm(), r.norm() / y.norm()),
        Err(e) => return Err(e),
    };
    let mut ing = BTreeMap::new();
    ing.insert("rho", rho);
    ing.insert("lambda", lambda);
    ing.insert("theta", angle);
    ing.insert("residual_norm", r.norm());
    ing.insert("projected_residual_norm", projected_ratio * y.norm());
    ing.insert("plane_invariance_defect", invariance_defect);
    let mut report = make_report("mixed_tan", lhs, rhs, ing);
    // Equality is certified by plane invariance, not by float agreement.
    report.equality = invariance_defect <= BOUND_FLAG_REL * r.norm().max(1.0);
    Ok(report)
}

fn residual_ratio_sq<T: Field>(a: &HermitianOperator<T>, y: &Vector<T>) -> Result<(f64, f64)> {
    let r = residual(a, y)?;
    let norm = r.norm();
    Ok((norm, norm * norm / y.norm_sq()))
}

/// Temple's product bound over the spectrum-free interval around the
/// quotient.
pub fn temple<T: Field>(
    a: &HermitianOperator<T>,
    y: &Vector<T>,
    ctx: &SpectrumContext,
) -> Result<BoundReport> {
    let alpha = ctx.below.ok_or_else(|| {
        Error::HypothesisViolated("no spectrum point below the Rayleigh quotient".into())
    })?;
    let beta = ctx.above.ok_or_else(|| {
        Error::HypothesisViolated("no spectrum point above the Rayleigh quotient".into())
    })?;
    let (res_norm, ratio_sq) = residual_ratio_sq(a, y)?;
    let lhs = (beta - ctx.rho) * (ctx.rho - alpha);
    let mut ing = BTreeMap::new();
    ing.insert("rho", ctx.rho);
    ing.insert("alpha", alpha);
    ing.insert("beta", beta);
    ing.insert("residual_norm", res_norm);
    Ok(make_report("temple", lhs, ratio_sq, ing))
}

/// Shared two-sided Kato-Temple interval; `res_sq_ratio` is the (possibly
/// projected) squared residual norm over the squared vector norm.
fn kato_interval(
    bound_name: &'static str,
    rho: f64,
    target: f64,
    below_target: Option<f64>,
    above_target: Option<f64>,
    res_sq_ratio: f64,
    mut ing: BTreeMap<&'static str, f64>,
) -> Result<BoundReport> {
    if let Some(a_pt) = below_target {
        if a_pt >= rho {
            return Err(Error::HypothesisViolated(format!(
                "spectrum point {a_pt:.6e} below the designated eigenvalue is not below rho"
            )));
        }
    }
    if let Some(b_pt) = above_target {
        if b_pt <= rho {
            return Err(Error::HypothesisViolated(format!(
                "spectrum point {b_pt:.6e} above the designated eigenvalue is not above rho"
            )));
        }
    }
    // Absent neighbors behave like infinitely remote ones: that side of
    // the interval collapses to zero.
    let lower = match below_target {
        Some(a_pt) => -res_sq_ratio / (rho - a_pt),
        None => 0.0,
    };
    let upper = match above_target {
        Some(b_pt) => res_sq_ratio / (b_pt - rho),
        None => 0.0,
    };
    let lhs = rho - target;
    let tol = flag_tol(lhs, upper.abs().max(lower.abs()));
    ing.insert("rho", rho);
    ing.insert("lambda", target);
    ing.insert("interval_lower", lower);
    ing.insert("interval_upper", upper);
    Ok(BoundReport {
        bound_name,
        lhs,
        rhs: upper,
        holds: lower - tol <= lhs && lhs <= upper + tol,
        equality: (lhs - upper).abs() <= tol || (lhs - lower).abs() <= tol,
        ingredients: ing,
    })
}

/// Kato-Temple two-sided localization of `rho - lambda` for the
/// designated eigenvalue in `ctx`.
pub fn kato_temple<T: Field>(
    a: &HermitianOperator<T>,
    y: &Vector<T>,
    ctx: &SpectrumContext,
) -> Result<BoundReport> {
    let (res_norm, ratio_sq) = residual_ratio_sq(a, y)?;
    let mut ing = BTreeMap::new();
    ing.insert("residual_norm", res_norm);
    kato_interval(
        "kato_temple",
        ctx.rho,
        ctx.target,
        ctx.target_below,
        ctx.target_above,
        ratio_sq,
        ing,
    )
}

/// Gap bound: some spectrum point lies within `|r|^2 / (delta |y|^2)` of
/// the quotient; the report exhibits the witness.
pub fn gap_bound<T: Field>(
    a: &HermitianOperator<T>,
    y: &Vector<T>,
    ctx: &SpectrumContext,
) -> Result<BoundReport> {
    let delta = ctx.gap.ok_or(Error::EmptyGap)?;
    if delta <= 0.0 {
        return Err(Error::EmptyGap);
    }
    let (res_norm, ratio_sq) = residual_ratio_sq(a, y)?;
    let lhs = (ctx.nearest - ctx.rho).abs();
    let rhs = ratio_sq / delta;
    let mut ing = BTreeMap::new();
    ing.insert("rho", ctx.rho);
    ing.insert("delta", delta);
    ing.insert("witness", ctx.nearest);
    ing.insert("residual_norm", res_norm);
    Ok(make_report("gap_bound", lhs, rhs, ing))
}

/// Krylov-Weinstein bound: the spectrum comes within one residual-norm
/// ratio of the quotient.
pub fn krylov_weinstein<T: Field>(
    a: &HermitianOperator<T>,
    y: &Vector<T>,
    dec: &SpectralDecomposition<T>,
) -> Result<BoundReport> {
    let rho = rayleigh_quotient(a, y)?;
    let witness = dec.eigenvalues()[dec.nearest_index(rho)];
    let r = residual(a, y)?;
    let lhs = (witness - rho).abs();
    let rhs = r.norm() / y.norm();
    let mut ing = BTreeMap::new();
    ing.insert("rho", rho);
    ing.insert("witness", witness);
    ing.insert("residual_norm", r.norm());
    Ok(make_report("krylov_weinstein", lhs, rhs, ing))
}

/// The plane and projections behind the sharper a posteriori bounds.
pub struct ImprovedPlane<T: Field> {
    pub rho: f64,
    pub ctx: SpectrumContext,
    pub plane: TwoDimRestriction<T>,
    /// |P_S r(y)| for S = span{(I - P_U) y, y}.
    pub projected_residual: f64,
    pub residual_norm: f64,
    /// |P_V r(y)| for V = U + span{y}.
    pub projected_v_union: f64,
    /// |P_V r(y)| for V = U-perp + span{y}.
    pub projected_v_complement: f64,
    /// The companion vector x = (I - P_U) y.
    pub companion: Vector<T>,
}

/// Build S = span{(I - P_U) y, y} where U is the invariant subspace for
/// the spectrum above rho(y), along with the projected residual norms of
/// the two coarser subspaces V of the projection hierarchy.
pub fn improved_plane<T: Field>(
    a: &HermitianOperator<T>,
    y: &Vector<T>,
    dec: &SpectralDecomposition<T>,
) -> Result<ImprovedPlane<T>> {
    let rho = rayleigh_quotient(a, y)?;
    let ctx = spectrum_context(dec, rho, None)?;
    let subspace = invariant_subspace_above(dec, rho)?;
    if subspace.is_empty() || subspace.len() == dec.dim() {
        return Err(Error::HypothesisViolated(
            "the quotient does not separate the spectrum".into(),
        ));
    }
    let companion = y.sub(&project_onto_orthonormal(&subspace, y));
    if companion.norm() <= 1e-14 * y.norm() {
        return Err(Error::OrthogonalToEigenspace);
    }
    let plane = restrict_2d(a, &companion, y)?;
    let r = residual(a, y)?;
    let projected_residual = plane.project(&r)?.norm();

    let mut union_basis = subspace.clone();
    union_basis.push(y.clone());
    let projected_v_union = project_onto_span(&union_basis, &r)?.norm();

    let mut complement_basis: Vec<Vector<T>> = dec
        .eigenvalues()
        .iter()
        .zip(dec.eigenvectors())
        .filter(|(&ev, _)| ev <= rho)
        .map(|(_, v)| v.clone())
        .collect();
    complement_basis.push(y.clone());
    let projected_v_complement = project_onto_span(&complement_basis, &r)?.norm();

    Ok(ImprovedPlane {
        rho,
        ctx,
        plane,
        projected_residual,
        residual_norm: r.norm(),
        projected_v_union,
        projected_v_complement,
        companion,
    })
}

fn degenerate_report(bound_name: &'static str, rho: f64) -> BoundReport {
    let mut ing = BTreeMap::new();
    ing.insert("rho", rho);
    ing.insert("degenerate", 1.0);
    make_report(bound_name, 0.0, 0.0, ing)
}

fn is_near_eigenvector<T: Field>(a: &HermitianOperator<T>, y: &Vector<T>) -> Result<bool> {
    // Relative to |Ay|, not |A|: the operator norm can dwarf the action
    // on a strongly decaying probe.
    let r = residual(a, y)?;
    let action = a.apply(y)?.norm();
    Ok(r.norm() <= EIGENVECTOR_CERT_REL * action.max(f64::MIN_POSITIVE))
}

/// Sharper Temple bound with the projected residual. The report carries
/// the classical right-hand side, both coarser projections of the
/// hierarchy, and the gap observed when the whole construction is redone
/// on `-A` (which must reproduce the same plane and values).
pub fn improved_temple<T: Field>(
    a: &HermitianOperator<T>,
    y: &Vector<T>,
    dec: &SpectralDecomposition<T>,
) -> Result<BoundReport> {
    if is_near_eigenvector(a, y)? {
        // All certified quantities vanish; the plane is one-dimensional.
        return Ok(degenerate_report("improved_temple", rayleigh_quotient(a, y)?));
    }
    let built = improved_plane(a, y, dec)?;
    let alpha = built.ctx.below.ok_or_else(|| {
        Error::HypothesisViolated("no spectrum point below the Rayleigh quotient".into())
    })?;
    let beta = built.ctx.above.ok_or_else(|| {
        Error::HypothesisViolated("no spectrum point above the Rayleigh quotient".into())
    })?;
    let lhs = (beta - built.rho) * (built.rho - alpha);
    let rhs = built.projected_residual.powi(2) / y.norm_sq();
    let classical_rhs = built.residual_norm.powi(2) / y.norm_sq();

    // Rebuilding against the negated operator must land on the same plane.
    let neg = improved_plane(&a.negated(), y, &dec.negated())?;
    let neg_alpha = neg.ctx.below.ok_or_else(|| {
        Error::HypothesisViolated("negated spectrum lost its lower neighbor".into())
    })?;
    let neg_beta = neg.ctx.above.ok_or_else(|| {
        Error::HypothesisViolated("negated spectrum lost its upper neighbor".into())
    })?;
    let neg_lhs = (neg_beta - neg.rho) * (neg.rho - neg_alpha);
    let neg_rhs = neg.projected_residual.powi(2) / y.norm_sq();
    let neg_gap = (lhs - neg_lhs).abs().max((rhs - neg_rhs).abs());

    let mut ing = BTreeMap::new();
    ing.insert("rho", built.rho);
    ing.insert("alpha", alpha);
    ing.insert("beta", beta);
    ing.insert("plane_eig_max", built.plane.eig_max());
    ing.insert("plane_eig_min", built.plane.eig_min());
    ing.insert("residual_norm", built.residual_norm);
    ing.insert("projected_residual_norm", built.projected_residual);
    ing.insert("projected_residual_v_union", built.projected_v_union);
    ing.insert("projected_residual_v_complement", built.projected_v_complement);
    ing.insert("classical_rhs", classical_rhs);
    ing.insert("neg_symmetry_gap", neg_gap);
    Ok(make_report("improved_temple", lhs, rhs, ing))
}

/// Kato-Temple interval with the projected residual in place of the full
/// one.
pub fn improved_kato_temple<T: Field>(
    a: &HermitianOperator<T>,
    y: &Vector<T>,
    dec: &SpectralDecomposition<T>,
    target_choice: Option<f64>,
) -> Result<BoundReport> {
    if is_near_eigenvector(a, y)? {
        return Ok(degenerate_report(
            "improved_kato_temple",
            rayleigh_quotient(a, y)?,
        ));
    }
    let built = improved_plane(a, y, dec)?;
    let ctx = spectrum_context(dec, built.rho, target_choice)?;
    let proj_sq_ratio = built.projected_residual.powi(2) / y.norm_sq();
    let classical_sq_ratio = built.residual_norm.powi(2) / y.norm_sq();
    let mut ing = BTreeMap::new();
    ing.insert("projected_residual_norm", built.projected_residual);
    ing.insert("residual_norm", built.residual_norm);
    ing.insert(
        "classical_interval_upper",
        match ctx.target_above {
            Some(b) => classical_sq_ratio / (b - ctx.rho),
            None => 0.0,
        },
    );
    kato_interval(
        "improved_kato_temple",
        ctx.rho,
        ctx.target,
        ctx.target_below,
        ctx.target_above,
        proj_sq_ratio,
        ing,
    )
}

/// Krylov-Weinstein bound with the projected residual.
pub fn improved_krylov_weinstein<T: Field>(
    a: &HermitianOperator<T>,
    y: &Vector<T>,
    dec: &SpectralDecomposition<T>,
) -> Result<BoundReport> {
    if is_near_eigenvector(a, y)? {
        return Ok(degenerate_report(
            "improved_krylov_weinstein",
            rayleigh_quotient(a, y)?,
        ));
    }
    let built = improved_plane(a, y, dec)?;
    let witness = dec.eigenvalues()[dec.nearest_index(built.rho)];
    let lhs = (witness - built.rho).abs();
    let rhs = built.projected_residual / y.norm();
    let mut ing = BTreeMap::new();
    ing.insert("rho", built.rho);
    ing.insert("witness", witness);
    ing.insert("projected_residual_norm", built.projected_residual);
    ing.insert("classical_rhs", built.residual_norm / y.norm());
    Ok(make_report("improved_krylov_weinstein", lhs, rhs, ing))
}

/// Eigenvector error bounds for the eigenspace of a designated eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenvectorErrorBounds {
    /// sin(2 theta) bound; present only when the designated eigenvalue is
    /// an isolated spectrum extreme and the quotient sits in the first gap.
    pub double_angle: Option<BoundReport>,
    /// tan(theta) bound under the same hypotheses plus an acute angle.
    pub tangent: Option<BoundReport>,
    /// Classical sin(theta) bound through the full residual and the gap.
    pub classical_sine: BoundReport,
    /// Value of the forbidden substitution |P_S r| / (delta |y|); kept as
    /// a negative control, never as a certified bound.
    pub naive_projected_rhs: f64,
    /// True when the naive substitution strictly fails to dominate
    /// sin(theta).
    pub naive_violation: bool,
    pub angle: f64,
}

/// Evaluate the eigenvector error bounds for `y` against the eigenspace
/// of `target_choice` (default: the smallest eigenvalue).
///
/// The comparison vector is the projection of `y` onto the designated
/// eigenspace. The sharper double-angle and tangent bounds require that
/// eigenvalue to be an isolated extreme of the spectrum with the quotient
/// inside the adjacent gap (the largest eigenvalue is handled through the
/// sign flip); otherwise only the classical bound and the negative
/// control are produced.
pub fn eigenvector_error_bounds<T: Field>(
    a: &HermitianOperator<T>,
    y: &Vector<T>,
    dec: &SpectralDecomposition<T>,
    target_choice: Option<f64>,
) -> Result<EigenvectorErrorBounds> {
    let rho = rayleigh_quotient(a, y)?;
    let target = match target_choice {
        Some(choice) => dec.eigenvalues()[dec.nearest_index(choice)],
        None => dec.min_eigenvalue(),
    };
    let cluster = dec.cluster_range(target);
    let eigenspace: Vec<Vector<T>> = dec.eigenvectors()[cluster.clone()].to_vec();
    let companion = project_onto_orthonormal(&eigenspace, y);
    if companion.norm() <= 1e-14 * y.norm() {
        return Err(Error::OrthogonalToEigenspace);
    }
    let ctx = spectrum_context(dec, rho, Some(target))?;
    let delta = ctx.gap.ok_or(Error::EmptyGap)?;
    let angle = acute_angle(&companion, y)?;
    let r = residual(a, y)?;
    let residual_ratio = r.norm() / y.norm();

    let projected_ratio = match restrict_2d(a, &companion, y) {
        Ok(plane) => plane.project(&r)?.norm() / y.norm(),
        // y inside the eigenspace: residual and projections all vanish.
        Err(Error::CollinearVectors) => 0.0,
        Err(e) => return Err(e),
    };

    let mut ing = BTreeMap::new();
    ing.insert("rho", rho);
    ing.insert("lambda", target);
    ing.insert("delta", delta);
    ing.insert("theta", angle);
    ing.insert("residual_norm", r.norm());
    ing.insert("projected_residual_norm", projected_ratio * y.norm());
    let naive_projected_rhs = projected_ratio / delta;
    let naive_violation = angle.sin() > naive_projected_rhs + 1e-12;
    ing.insert("naive_projected_rhs", naive_projected_rhs);
    ing.insert("naive_violation", if naive_violation { 1.0 } else { 0.0 });
    let classical_sine = make_report(
        "classical_sin_theta",
        angle.sin(),
        residual_ratio / delta,
        ing,
    );

    // Extreme-eigenvalue hypotheses for the sharper bounds. A designated
    // largest eigenvalue reduces to the smallest one of the negated
    // operator; both neighbor distances below come out positive exactly
    // in the applicable window.
    let is_bottom = cluster.start == 0;
    let is_top = cluster.end == dec.dim();
    let improved = if is_bottom && !is_top {
        ctx.target_above
            .filter(|&beta| target < rho && rho < beta)
            .map(|beta| (beta - target, beta - rho))
    } else if is_top && !is_bottom {
        ctx.target_below
            .filter(|&alpha| alpha < rho && rho < target)
            .map(|alpha| (target - alpha, rho - alpha))
    } else {
        None
    };
    let (double_angle, tangent) = match improved {
        Some((edge_gap, quotient_gap)) => {
            let mut ing2 = BTreeMap::new();
            ing2.insert("rho", rho);
            ing2.insert("lambda", target);
            ing2.insert("theta", angle);
            ing2.insert("edge_gap", edge_gap);
            ing2.insert("projected_residual_norm", projected_ratio * y.norm());
            let da = make_report(
                "sin_2theta",
                (2.0 * angle).sin(),
                2.0 / edge_gap * projected_ratio,
                ing2.clone(),
            );
            let tan = (angle < FRAC_PI_2 - RIGHT_ANGLE_GUARD).then(|| {
                ing2.insert("quotient_gap", quotient_gap);
                make_report("tan_theta", angle.tan(), projected_ratio / quotient_gap, ing2)
            });
            (Some(da), tan)
        }
        None => (None, None),
    };

    Ok(EigenvectorErrorBounds {
        double_angle,
        tangent,
        classical_sine,
        naive_projected_rhs,
        naive_violation,
        angle,
    })
}

/// Run every bound whose hypotheses hold for the given operator and
/// probe vector; bounds with failed hypotheses become skip records. The
/// optional `x_ref` enables the a priori and mixed bounds.
pub fn run_catalogue<T: Field>(
    a: &HermitianOperator<T>,
    y: &Vector<T>,
    x_ref: Option<&Vector<T>>,
) -> Result<Vec<BoundOutcome>> {
    if y.norm() <= 0.0 {
        return Err(Error::ZeroVector);
    }
    let dec = eigendecompose(a)?;
    let rho = rayleigh_quotient(a, y)?;
    let mut out = Vec::new();

    let push = |name: &'static str, result: Result<BoundReport>, out: &mut Vec<BoundOutcome>| {
        match result {
            Ok(report) => out.push(BoundOutcome::Ran(report)),
            Err(e) => out.push(BoundOutcome::Skipped {
                bound_name: name,
                reason: e.to_string(),
            }),
        }
    };

    match x_ref {
        Some(x) => {
            push("apriori_sin2", apriori_sin2(a, x, y, &dec), &mut out);
            push("mixed_tan", mixed_tan(a, x, y), &mut out);
        }
        None => {
            for name in ["apriori_sin2", "mixed_tan"] {
                out.push(BoundOutcome::Skipped {
                    bound_name: name,
                    reason: "no reference eigenvector supplied".into(),
                });
            }
        }
    }

    match spectrum_context(&dec, rho, None) {
        Ok(ctx) => {
            push("temple", temple(a, y, &ctx), &mut out);
            push("kato_temple", kato_temple(a, y, &ctx), &mut out);
            push("gap_bound", gap_bound(a, y, &ctx), &mut out);
        }
        Err(e) => {
            let reason = e.to_string();
            for name in ["temple", "kato_temple", "gap_bound"] {
                out.push(BoundOutcome::Skipped {
                    bound_name: name,
                    reason: reason.clone(),
                });
            }
        }
    }

    push("krylov_weinstein", krylov_weinstein(a, y, &dec), &mut out);
    push("improved_temple", improved_temple(a, y, &dec), &mut out);
    push(
        "improved_kato_temple",
        improved_kato_temple(a, y, &dec, None),
        &mut out,
    );
    push(
        "improved_krylov_weinstein",
        improved_krylov_weinstein(a, y, &dec),
        &mut out,
    );

    match eigenvector_error_bounds(a, y, &dec, None) {
        Ok(ev) => {
            let skip_reason = "extreme-eigenvalue hypotheses not met";
            match ev.double_angle {
                Some(r) => out.push(BoundOutcome::Ran(r)),
                None => out.push(BoundOutcome::Skipped {
                    bound_name: "sin_2theta",
                    reason: skip_reason.into(),
                }),
            }
            match ev.tangent {
                Some(r) => out.push(BoundOutcome::Ran(r)),
                None => out.push(BoundOutcome::Skipped {
                    bound_name: "tan_theta",
                    reason: skip_reason.into(),
                }),
            }
            out.push(BoundOutcome::Ran(ev.classical_sine));
        }
        Err(e) => {
            let reason = e.to_string();
            for name in ["sin_2theta", "tan_theta", "classical_sin_theta"] {
                out.push(BoundOutcome::Skipped {
                    bound_name: name,
                    reason: reason.clone(),
                });
            }
        }
    }

    Ok(out)
}
