//! Error type shared across the crate.

/// Errors reported by the numerical kernels.
///
/// Every failure of a precondition (dimension mismatch, zero vector,
/// degenerate plane, ...) is a structured variant so callers can decide
/// whether an operation was inapplicable or the input was malformed.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operation requires a nonzero vector")]
    ZeroVector,

    #[error("entries must be finite")]
    NonFiniteEntry,

    #[error("matrix is not Hermitian: defect {defect:.3e} exceeds {tol:.3e} * norm")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("vectors are collinear; the spanned plane is one-dimensional")]
    CollinearVectors,

    #[error("probe vector lies outside the plane: component {outside:.3e} of norm {norm:.3e}")]
    OutsideSubspace { outside: f64, norm: f64 },

    #[error("Rayleigh quotient {rho:.17e} coincides with spectrum point {nearest:.17e}")]
    SpectrumCoincidence { rho: f64, nearest: f64 },

    #[error("tangent bound undefined: angle {angle:.17e} rad is within guard of a right angle")]
    TangentUndefined { angle: f64 },

    #[error(
        "Jacobi sweep cap reached after {sweeps} sweeps: off-diagonal norm {achieved:.3e} > target {target:.3e}"
    )]
    NoConvergence {
        sweeps: usize,
        achieved: f64,
        target: f64,
    },

    #[error("vector is not an eigenvector: relative residual {relative:.3e}")]
    NotAnEigenvector { relative: f64 },

    #[error("vector is orthogonal to the designated eigenspace")]
    OrthogonalToEigenspace,

    #[error("no spectrum outside the designated eigenspace; gap undefined")]
    EmptyGap,

    #[error("bound hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
