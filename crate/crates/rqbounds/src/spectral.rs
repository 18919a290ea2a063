//! Dense Hermitian eigendecomposition (cyclic Jacobi) and spectrum
//! context queries: nearest spectrum neighbors, gaps, and invariant
//! subspaces above a level.

use crate::error::{Error, Result};
use crate::operator::{HermitianOperator, Matrix};
use crate::scalar::Field;
use crate::vector::{inner, Vector};

/// Convergence target: off-diagonal Frobenius norm relative to the input.
pub const JACOBI_OFF_REL: f64 = 1e-14;

/// Sweep cap before reporting non-convergence.
pub const JACOBI_MAX_SWEEPS: usize = 60;

/// Relative tolerance for clustering equal eigenvalues into one
/// eigenspace. Scaled by the eigenvalue's own magnitude so that widely
/// spread spectra (geometric diagonals) do not glue distinct eigenvalues
/// together.
pub const CLUSTER_REL: f64 = 1e-8;

/// Relative factor for declaring a Rayleigh quotient coincident with a
/// spectrum point. Scaled by the local magnitudes, not the spectral
/// radius, so operators with huge extremes keep usable gaps near small
/// eigenvalues.
pub const COINCIDE_REL: f64 = 1e-10;

fn coincide_tol(rho: f64, nearest: f64) -> f64 {
    COINCIDE_REL * rho.abs().max(nearest.abs()).max(1.0)
}

/// Full eigensystem of a Hermitian operator: ascending eigenvalues paired
/// with orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition<T: Field> {
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<Vector<T>>,
}

impl<T: Field> SpectralDecomposition<T> {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &[Vector<T>] {
        &self.eigenvectors
    }

    pub fn eigenvector(&self, index: usize) -> &Vector<T> {
        &self.eigenvectors[index]
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("dimension >= 1")
    }

    pub fn spectral_radius(&self) -> f64 {
        self.min_eigenvalue().abs().max(self.max_eigenvalue().abs())
    }

    /// Tolerance used to group eigenvalues near `anchor` into one
    /// eigenspace.
    pub fn cluster_tol_at(&self, anchor: f64) -> f64 {
        CLUSTER_REL * anchor.abs()
    }

    /// Index of the eigenvalue nearest to `value` (ties resolve to the
    /// smaller eigenvalue).
    pub fn nearest_index(&self, value: f64) -> usize {
        let mut best = 0;
        let mut best_dist = f64::INFINITY;
        for (i, &ev) in self.eigenvalues.iter().enumerate() {
            let d = (ev - value).abs();
            if d < best_dist {
                best = i;
                best_dist = d;
            }
        }
        best
    }

    /// Contiguous index range of the eigenvalue cluster containing `target`.
    pub fn cluster_range(&self, target: f64) -> std::ops::Range<usize> {
        let center = self.nearest_index(target);
        let anchor = self.eigenvalues[center];
        let tol = self.cluster_tol_at(anchor);
        let mut lo = center;
        while lo > 0 && (self.eigenvalues[lo - 1] - anchor).abs() <= tol {
            lo -= 1;
        }
        let mut hi = center + 1;
        while hi < self.eigenvalues.len() && (self.eigenvalues[hi] - anchor).abs() <= tol {
            hi += 1;
        }
        lo..hi
    }

    /// Decomposition of `-A` derived by negating and reversing.
    pub fn negated(&self) -> Self {
        let eigenvalues = self.eigenvalues.iter().rev().map(|v| -v).collect();
        let eigenvectors = self.eigenvectors.iter().rev().cloned().collect();
        Self {
            eigenvalues,
            eigenvectors,
        }
    }
}

/// Cyclic Jacobi on a Hermitian working copy. Returns (diagonal, vectors).
fn jacobi<T: Field>(mut m: Matrix<T>) -> Result<(Vec<f64>, Vec<Vector<T>>)> {
    let n = m.n();
    let target = JACOBI_OFF_REL * m.fro_norm();
    let mut v = Matrix::<T>::identity(n);

    let off_norm = |m: &Matrix<T>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m.get(i, j).abs_sq();
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&m);
        if off <= target || n < 2 {
            break;
        }
        if sweeps >= JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                achieved: off,
                target,
            });
        }
        sweeps += 1;

        for p in 0..n - 1 {
            for q in p + 1..n {
                let b = m.get(p, q);
                let beta = b.abs();
                if beta == 0.0 {
                    continue;
                }
                let app = m.get(p, p).re();
                let aqq = m.get(q, q).re();
                let tau = (app - aqq) / (2.0 * beta);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (tau - (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let phase = b.scale(1.0 / beta);
                let su = phase.scale(s);
                let su_conj = su.conj();

                // Columns p, q of both the matrix and the accumulator.
                for k in 0..n {
                    let mkp = m.get(k, p);
                    let mkq = m.get(k, q);
                    m.set(k, p, mkp.scale(c) + mkq * su_conj);
                    m.set(k, q, mkq.scale(c) - mkp * su);

                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, vkp.scale(c) + vkq * su_conj);
                    v.set(k, q, vkq.scale(c) - vkp * su);
                }
                // Rows p, q.
                for k in 0..n {
                    let mpk = m.get(p, k);
                    let mqk = m.get(q, k);
                    m.set(p, k, mpk.scale(c) + mqk * su);
                    m.set(q, k, mqk.scale(c) - mpk * su_conj);
                }
                // The rotation zeroes the pivot pair; pin the diagonal real.
                m.set(p, q, T::zero());
                m.set(q, p, T::zero());
                m.set(p, p, T::from_re(m.get(p, p).re()));
                m.set(q, q, T::from_re(m.get(q, q).re()));
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        m.get(i, i)
            .re()
            .partial_cmp(&m.get(j, j).re())
            .expect("finite eigenvalues")
    });
    let eigenvalues = order.iter().map(|&i| m.get(i, i).re()).collect();
    let eigenvectors = order
        .iter()
        .map(|&col| {
            Vector::new((0..n).map(|row| v.get(row, col)).collect()).expect("finite eigenvector")
        })
        .collect();
    Ok((eigenvalues, eigenvectors))
}

/// Eigendecompose a Hermitian operator.
///
/// Dense operators go through cyclic Jacobi sweeps until the off-diagonal
/// Frobenius norm falls below [`JACOBI_OFF_REL`] times the input norm (or
/// the sweep cap reports non-convergence); diagonal operators sort their
/// entries directly.
pub fn eigendecompose<T: Field>(a: &HermitianOperator<T>) -> Result<SpectralDecomposition<T>> {
    if let Some(d) = a.diagonal_entries() {
        let n = d.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).expect("finite entries"));
        let eigenvalues = order.iter().map(|&i| d[i]).collect();
        let eigenvectors = order.iter().map(|&i| Vector::basis(n, i)).collect();
        return Ok(SpectralDecomposition {
            eigenvalues,
            eigenvectors,
        });
    }
    let (eigenvalues, eigenvectors) = jacobi(a.to_matrix())?;
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Neighborhood of a Rayleigh quotient within the spectrum: the nearest
/// points below and above, the designated target point, and the gap to
/// the rest of the spectrum with the target's eigenspace removed.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumContext {
    pub rho: f64,
    /// Nearest spectrum point strictly below `rho`.
    pub below: Option<f64>,
    /// Nearest spectrum point strictly above `rho`.
    pub above: Option<f64>,
    pub below_multiplicity: usize,
    pub above_multiplicity: usize,
    /// Spectrum point nearest to `rho`, regardless of designation.
    pub nearest: f64,
    /// Designated spectrum point (caller's choice snapped to the spectrum,
    /// or the nearest point).
    pub target: f64,
    /// Nearest spectrum point strictly below the target's cluster.
    pub target_below: Option<f64>,
    /// Nearest spectrum point strictly above the target's cluster.
    pub target_above: Option<f64>,
    /// min |eta - rho| over the spectrum with the target cluster removed;
    /// `None` when nothing remains.
    pub gap: Option<f64>,
}

/// Build the [`SpectrumContext`] for `rho`.
///
/// Without a designation, `rho` sitting on a spectrum point is an error
/// (gap-based bounds are meaningless there). With `target_choice` given,
/// coincidence with the designated cluster is allowed; coincidence with
/// any other point still errors.
pub fn spectrum_context<T: Field>(
    dec: &SpectralDecomposition<T>,
    rho: f64,
    target_choice: Option<f64>,
) -> Result<SpectrumContext> {
    if !rho.is_finite() {
        return Err(Error::InvalidParameter("rho must be finite".into()));
    }
    let evs = dec.eigenvalues();
    let nearest = evs[dec.nearest_index(rho)];
    let target = match target_choice {
        Some(choice) => evs[dec.nearest_index(choice)],
        None => nearest,
    };
    let cluster = dec.cluster_range(target);
    let ctol = coincide_tol(rho, nearest);

    if (rho - nearest).abs() <= ctol {
        let nearest_in_cluster = cluster.contains(&dec.nearest_index(rho));
        if target_choice.is_none() || !nearest_in_cluster {
            return Err(Error::SpectrumCoincidence { rho, nearest });
        }
    }

    let multiplicity_at = |value: f64| dec.cluster_range(value).len();

    let below = evs
        .iter()
        .rev()
        .find(|&&ev| ev < rho - ctol)
        .copied();
    let above = evs.iter().find(|&&ev| ev > rho + ctol).copied();

    let mut gap = f64::INFINITY;
    for (i, &ev) in evs.iter().enumerate() {
        if !cluster.contains(&i) {
            gap = gap.min((ev - rho).abs());
        }
    }

    Ok(SpectrumContext {
        rho,
        below_multiplicity: below.map_or(0, multiplicity_at),
        above_multiplicity: above.map_or(0, multiplicity_at),
        below,
        above,
        nearest,
        target,
        target_below: if cluster.start > 0 {
            Some(evs[cluster.start - 1])
        } else {
            None
        },
        target_above: evs.get(cluster.end).copied(),
        gap: gap.is_finite().then_some(gap),
    })
}

/// Orthonormal eigenvectors spanning the invariant subspace for all
/// eigenvalues above `rho`. Requires `rho` off the spectrum.
pub fn invariant_subspace_above<T: Field>(
    dec: &SpectralDecomposition<T>,
    rho: f64,
) -> Result<Vec<Vector<T>>> {
    let nearest = dec.eigenvalues()[dec.nearest_index(rho)];
    if (rho - nearest).abs() <= coincide_tol(rho, nearest) {
        return Err(Error::SpectrumCoincidence { rho, nearest });
    }
    Ok(dec
        .eigenvalues()
        .iter()
        .zip(dec.eigenvectors())
        .filter(|(&ev, _)| ev > rho)
        .map(|(_, v)| v.clone())
        .collect())
}

/// The matrix of `a` restricted to an orthonormal basis: entries
/// `<basis_i, A basis_j>`, Hermitized.
pub fn restricted_matrix<T: Field>(
    a: &HermitianOperator<T>,
    basis: &[Vector<T>],
) -> Result<Matrix<T>> {
    let k = basis.len();
    if k == 0 {
        return Err(Error::InvalidParameter("empty basis".into()));
    }
    let images: Vec<Vector<T>> = basis
        .iter()
        .map(|b| a.apply(b))
        .collect::<Result<_>>()?;
    let mut m = Matrix::zeros(k);
    for i in 0..k {
        for j in 0..=i {
            let entry = (inner(&basis[i], &images[j])? + inner(&basis[j], &images[i])?.conj())
                .scale(0.5);
            if i == j {
                m.set(i, i, T::from_re(entry.re()));
            } else {
                m.set(i, j, entry);
                m.set(j, i, entry.conj());
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projection::project_onto_orthonormal;
    use num_complex::Complex64;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn reconstruction_defect<T: Field>(
        a: &HermitianOperator<T>,
        dec: &SpectralDecomposition<T>,
    ) -> f64 {
        let mut s = 0.0;
        for (ev, v) in dec.eigenvalues().iter().zip(dec.eigenvectors()) {
            let av = a.apply(v).unwrap();
            s += av.sub(&v.scaled(*ev)).norm_sq();
        }
        s.sqrt()
    }

    fn orthonormality_defect<T: Field>(dec: &SpectralDecomposition<T>) -> f64 {
        let n = dec.dim();
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                let g = inner(dec.eigenvector(i), dec.eigenvector(j)).unwrap();
                let expected = if i == j { 1.0 } else { 0.0 };
                s += (g.re() - expected).powi(2) + g.im().powi(2);
            }
        }
        s.sqrt()
    }

    fn random_symmetric(n: usize, rng: &mut ChaCha8Rng) -> HermitianOperator<f64> {
        let mut rows = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..=i {
                let v: f64 = rng.random_range(-1.0..1.0);
                rows[i][j] = v;
                rows[j][i] = v;
            }
        }
        HermitianOperator::from_rows(rows).unwrap()
    }

    fn random_hermitian_complex(n: usize, rng: &mut ChaCha8Rng) -> HermitianOperator<Complex64> {
        let mut rows = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for i in 0..n {
            for j in 0..=i {
                if i == j {
                    rows[i][i] = Complex64::new(rng.random_range(-1.0..1.0), 0.0);
                } else {
                    let z = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                    rows[i][j] = z;
                    rows[j][i] = z.conj();
                }
            }
        }
        HermitianOperator::from_rows(rows).unwrap()
    }

    #[test]
    fn diagonal_variant_sorts_directly() {
        let a = HermitianOperator::<f64>::from_diagonal(vec![3.0, 1.0, 2.0]).unwrap();
        let dec = eigendecompose(&a).unwrap();
        assert_eq!(dec.eigenvalues(), &[1.0, 2.0, 3.0]);
        assert_eq!(dec.eigenvector(0).as_slice(), &[0.0, 1.0, 0.0]);
        assert_eq!(dec.eigenvector(2).as_slice(), &[1.0, 0.0, 0.0]);
    }

    #[test]
    fn dense_permutation_matrix() {
        let a = HermitianOperator::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let dec = eigendecompose(&a).unwrap();
        assert!((dec.eigenvalues()[0] + 1.0).abs() <= 1e-14);
        assert!((dec.eigenvalues()[1] - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn dense_diag_through_jacobi() {
        let a = HermitianOperator::from_rows(vec![
            vec![3.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 2.0],
        ])
        .unwrap();
        let dec = eigendecompose(&a).unwrap();
        assert_eq!(dec.eigenvalues(), &[1.0, 2.0, 3.0]);
    }

    #[test]
    fn pauli_like_complex_pair() {
        let i = Complex64::new(0.0, 1.0);
        let z = Complex64::new(0.0, 0.0);
        let a = HermitianOperator::from_rows(vec![vec![z, -i], vec![i, z]]).unwrap();
        let dec = eigendecompose(&a).unwrap();
        assert!((dec.eigenvalues()[0] + 1.0).abs() <= 1e-14);
        assert!((dec.eigenvalues()[1] - 1.0).abs() <= 1e-14);
        assert!(reconstruction_defect(&a, &dec) <= 1e-12);
    }

    #[test]
    fn random_real_and_complex_meet_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [2usize, 5, 17, 50] {
            let a = random_symmetric(n, &mut rng);
            let dec = eigendecompose(&a).unwrap();
            assert!(reconstruction_defect(&a, &dec) <= 1e-10 * a.fro_norm());
            assert!(orthonormality_defect(&dec) <= 1e-12 * n as f64);
            let mut sorted = dec.eigenvalues().to_vec();
            sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
            assert_eq!(sorted, dec.eigenvalues());

            let ac = random_hermitian_complex(n, &mut rng);
            let decc = eigendecompose(&ac).unwrap();
            assert!(reconstruction_defect(&ac, &decc) <= 1e-10 * ac.fro_norm());
            assert!(orthonormality_defect(&decc) <= 1e-12 * n as f64);
        }
    }

    #[test]
    fn one_by_one() {
        let a = HermitianOperator::from_rows(vec![vec![4.0]]).unwrap();
        let dec = eigendecompose(&a).unwrap();
        assert_eq!(dec.eigenvalues(), &[4.0]);
    }

    #[test]
    fn context_coincidence_and_designation() {
        let a = HermitianOperator::<f64>::from_diagonal(vec![1.0, 0.0, -1.0]).unwrap();
        let dec = eigendecompose(&a).unwrap();
        // Unfiltered: rho = 0 sits exactly on the spectrum.
        assert!(matches!(
            spectrum_context(&dec, 0.0, None).unwrap_err(),
            Error::SpectrumCoincidence { .. }
        ));
        // Designating the coinciding point removes it from the gap.
        let ctx = spectrum_context(&dec, 0.0, Some(0.0)).unwrap();
        assert_eq!(ctx.gap, Some(1.0));
        assert_eq!(ctx.below, Some(-1.0));
        assert_eq!(ctx.above, Some(1.0));
        assert_eq!(ctx.target, 0.0);
        assert_eq!(ctx.target_below, Some(-1.0));
        assert_eq!(ctx.target_above, Some(1.0));
    }

    #[test]
    fn context_simple_neighbors() {
        let a = HermitianOperator::<f64>::from_diagonal(vec![1.0, 2.0]).unwrap();
        let dec = eigendecompose(&a).unwrap();
        let ctx = spectrum_context(&dec, 1.5, None).unwrap();
        assert_eq!(ctx.below, Some(1.0));
        assert_eq!(ctx.above, Some(2.0));
        assert_eq!(ctx.nearest, 1.0); // tie resolves to the smaller value
        assert!(ctx.below < Some(ctx.rho) && Some(ctx.rho) < ctx.above);
    }

    #[test]
    fn context_geometric_diagonal() {
        let a = HermitianOperator::<f64>::from_diagonal(
            (0..64).map(|k| 2.0_f64.powi(k)).collect(),
        )
        .unwrap();
        let dec = eigendecompose(&a).unwrap();
        let ctx = spectrum_context(&dec, 1.5, None).unwrap();
        assert_eq!(ctx.below, Some(1.0));
        assert_eq!(ctx.above, Some(2.0));
    }

    #[test]
    fn context_outside_spectrum_is_one_sided() {
        let a = HermitianOperator::<f64>::from_diagonal(vec![1.0, 2.0]).unwrap();
        let dec = eigendecompose(&a).unwrap();
        let ctx = spectrum_context(&dec, 5.0, None).unwrap();
        assert_eq!(ctx.above, None);
        assert_eq!(ctx.below, Some(2.0));
        let ctx = spectrum_context(&dec, -3.0, None).unwrap();
        assert_eq!(ctx.below, None);
        assert_eq!(ctx.above, Some(1.0));
    }

    #[test]
    fn monotone_neighbor_consistency() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let a = random_symmetric(6, &mut rng);
            let dec = eigendecompose(&a).unwrap();
            let rho = rng.random_range(dec.min_eigenvalue()..dec.max_eigenvalue());
            if let Ok(ctx) = spectrum_context(&dec, rho, None) {
                if let (Some(b), Some(t)) = (ctx.below, ctx.above) {
                    assert!(b <= ctx.nearest && ctx.nearest <= t);
                }
            }
        }
    }

    #[test]
    fn subspace_above_small_diag() {
        let a = HermitianOperator::<f64>::from_diagonal(vec![1.0, 0.0, -1.0]).unwrap();
        let dec = eigendecompose(&a).unwrap();
        let u = invariant_subspace_above(&dec, 0.5).unwrap();
        assert_eq!(u.len(), 1);
        assert_eq!(u[0].as_slice(), &[1.0, 0.0, 0.0]);
    }

    #[test]
    fn subspace_above_geometric() {
        let n = 64;
        let a = HermitianOperator::<f64>::from_diagonal(
            (0..n).map(|k| 2.0_f64.powi(k as i32)).collect(),
        )
        .unwrap();
        let dec = eigendecompose(&a).unwrap();
        let u = invariant_subspace_above(&dec, 1.5).unwrap();
        assert_eq!(u.len(), n as usize - 1);
        let y = Vector::from_reals(
            &(0..n).map(|k| 2.0_f64.powi(-k)).collect::<Vec<_>>(),
        )
        .unwrap();
        let x = y.sub(&project_onto_orthonormal(&u, &y));
        // Only the first coordinate survives.
        assert!((x.get(0) - 1.0).abs() <= 1e-15);
        assert!(x.norm_sq() - x.get(0) * x.get(0) <= 1e-30);
    }

    #[test]
    fn subspace_is_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_symmetric(6, &mut rng);
        let dec = eigendecompose(&a).unwrap();
        let rho = 0.5 * (dec.eigenvalues()[2] + dec.eigenvalues()[3]);
        let u = invariant_subspace_above(&dec, rho).unwrap();
        // || (I - P_U) A P_U || over a probe set
        for v in &u {
            let av = a.apply(v).unwrap();
            let outside = av.sub(&project_onto_orthonormal(&u, &av));
            assert!(outside.norm() <= 1e-10 * a.fro_norm());
        }
    }

    #[test]
    fn restricted_matrix_reproduces_quotients() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_symmetric(5, &mut rng);
        let dec = eigendecompose(&a).unwrap();
        let basis: Vec<Vector<f64>> = dec.eigenvectors()[2..].to_vec();
        let m = restricted_matrix(&a, &basis).unwrap();
        for (i, ev) in dec.eigenvalues()[2..].iter().enumerate() {
            assert!((m.get(i, i) - ev).abs() <= 1e-10 * a.fro_norm());
        }
    }

    #[test]
    fn smallest_restricted_eigenvalue_splits_off() {
        // V = U + span{y}: the smallest eigenvalue of the restriction is
        // rho((I - P_U) y), simple, and strictly below rho(y).
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..10 {
            let a = random_symmetric(7, &mut rng);
            let dec = eigendecompose(&a).unwrap();
            let y = Vector::from_reals(
                &(0..7).map(|_| rng.random_range(-1.0..1.0)).collect::<Vec<_>>(),
            )
            .unwrap();
            let rho = crate::operator::rayleigh_quotient(&a, &y).unwrap();
            let Ok(u) = invariant_subspace_above(&dec, rho) else {
                continue;
            };
            if u.is_empty() || u.len() == dec.dim() {
                continue;
            }
            let x = y.sub(&project_onto_orthonormal(&u, &y));
            if x.norm() <= 1e-12 {
                continue;
            }
            let rho_x = crate::operator::rayleigh_quotient(&a, &x).unwrap();
            let mut basis = u.clone();
            basis.push(x.normalized().unwrap());
            let m = restricted_matrix(&a, &basis).unwrap();
            let sub = HermitianOperator::from_dense(m).unwrap();
            let sub_dec = eigendecompose(&sub).unwrap();
            let smallest = sub_dec.min_eigenvalue();
            assert!((smallest - rho_x).abs() <= 1e-9 * a.fro_norm().max(1.0));
            assert!(smallest < rho);
            // multiplicity one: a real gap to the next restricted eigenvalue
            assert!(sub_dec.eigenvalues()[1] - smallest > 1e-9);
        }
    }
}
