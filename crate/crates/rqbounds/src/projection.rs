//! Orthogonal projections onto spans, via modified Gram-Schmidt with one
//! reorthogonalization pass.

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::vector::{inner, Vector};

/// Directions whose norm drops below this fraction of the original are
/// treated as linearly dependent and dropped.
pub const DEPENDENT_DROP_REL: f64 = 1e-12;

fn check_dims<T: Field>(basis: &[Vector<T>], v: &Vector<T>) -> Result<()> {
    for b in basis {
        if b.len() != v.len() {
            return Err(Error::DimensionMismatch {
                left: b.len(),
                right: v.len(),
            });
        }
    }
    Ok(())
}

/// Subtract from `v` its components along the orthonormal set `q`.
fn orthogonalize_against<T: Field>(q: &[Vector<T>], v: &Vector<T>) -> Vector<T> {
    let mut out = v.clone();
    for b in q {
        let c = inner(b, &out).expect("dims checked");
        out = out.axpy(-c, b);
    }
    out
}

/// Orthonormal basis of span(basis). Dependent directions are dropped;
/// zero input vectors are rejected.
pub fn orthonormalize<T: Field>(basis: &[Vector<T>]) -> Result<Vec<Vector<T>>> {
    let mut q: Vec<Vector<T>> = Vec::with_capacity(basis.len());
    for v in basis {
        let original = v.norm();
        if original <= 0.0 {
            return Err(Error::ZeroVector);
        }
        if let Some(first) = q.first() {
            if first.len() != v.len() {
                return Err(Error::DimensionMismatch {
                    left: first.len(),
                    right: v.len(),
                });
            }
        }
        let mut w = orthogonalize_against(&q, v);
        // Second pass restores orthogonality lost to cancellation.
        w = orthogonalize_against(&q, &w);
        if w.norm() <= DEPENDENT_DROP_REL * original {
            continue;
        }
        q.push(w.normalized()?);
    }
    Ok(q)
}

/// Orthogonal projection of `v` onto span(basis).
pub fn project_onto_span<T: Field>(basis: &[Vector<T>], v: &Vector<T>) -> Result<Vector<T>> {
    check_dims(basis, v)?;
    let q = orthonormalize(basis)?;
    Ok(project_onto_orthonormal(&q, v))
}

/// Projection onto an already orthonormal set.
pub fn project_onto_orthonormal<T: Field>(q: &[Vector<T>], v: &Vector<T>) -> Vector<T> {
    let mut out = Vector::zeros(v.len());
    for b in q {
        let c = inner(b, v).expect("dims checked");
        out = out.axpy(c, b);
    }
    out
}
