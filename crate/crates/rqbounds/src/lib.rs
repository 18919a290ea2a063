//! Certified perturbation identities and a posteriori error bounds for
//! Rayleigh quotients of Hermitian operators.
//!
//! The crate evaluates both sides of each identity or bound numerically
//! and reports structured results, so a computation can be certified
//! (or a violation surfaced) rather than trusted. The sharper bounds
//! replace the full residual norm by the norm of the residual projected
//! onto the plane spanned by the probe vector and a distinguished
//! companion, which stays finite and small in situations where the full
//! residual is useless.

pub mod bounds;
pub mod error;
pub mod experiments;
pub mod identities;
pub mod operator;
pub mod projection;
pub mod restriction;
pub mod scalar;
pub mod spectral;
pub mod vector;

pub use bounds::{BoundOutcome, BoundReport, EigenvectorErrorBounds};
pub use error::{Error, Result};
pub use experiments::ExperimentResult;
pub use identities::{EqualityCase, SineBoundResult, TangentBoundResult};
pub use operator::{rayleigh_quotient, residual, HermitianOperator, Matrix};
pub use projection::{orthonormalize, project_onto_span};
pub use restriction::{restrict_2d, TwoDimRestriction};
pub use scalar::{Field, Scalar};
pub use spectral::{
    eigendecompose, invariant_subspace_above, spectrum_context, SpectralDecomposition,
    SpectrumContext,
};
pub use vector::{acute_angle, inner, Vector};
