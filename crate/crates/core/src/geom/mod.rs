//! Projective geometry with torus weights: parametrized curves and
//! surfaces, quadrics as symmetric Gram matrices, linear subspaces,
//! intersection divisors on the parameter line, and Jacobian-based
//! singularity certificates.

mod curve;
mod divisor;
mod jacobian;
mod quadric;
mod space;
mod subspace;
mod surface;

pub use curve::ParamCurve;
pub use divisor::P1Divisor;
pub use jacobian::{poly_det, singular_on_family, Family, SingularityCert};
pub use quadric::QuadricForm;
pub use space::{CoordPermutation, ProjPoint, WeightedProjSpace};
pub use subspace::{restrict_to_line, LinearSubspace};
pub use surface::ParamSurface;

use thiserror::Error;

use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("coordinate count {got} does not match the ambient space ({expected})")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("all coordinates are zero")]
    AllZero,
    #[error("form is not a quadric")]
    NotQuadratic,
    #[error("parametrization forms have different degrees")]
    MixedDegrees,
    #[error("parametrization forms share the common factor {0}")]
    CommonFactor(String),
    #[error("spanning set is degenerate (rank {rank}, expected {expected})")]
    DegenerateSpan { rank: usize, expected: usize },
    #[error("curve is contained in the cutting subspace")]
    ContainedInSubspace,
    #[error("codimension {codim} exceeds the Jacobian format {rows}x{cols}")]
    BadCodimension { codim: usize, rows: usize, cols: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}
