//! Sparse exact multivariate polynomials, homogeneous binary forms, and
//! the univariate machinery (gcd, squarefree decomposition, factorization)
//! that intersection-divisor computations reduce to.

mod binary;
mod factor;
mod multi;
mod unipoly;

pub use binary::BinaryForm;
pub use factor::FactorizeOver;
pub use multi::{MultiPoly, WeightVector};
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("expected {expected} substitution images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("substitution images live in different polynomial rings")]
    MixedVariableCounts,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("the zero form is not allowed here")]
    ZeroForm,
    #[error("gcd of two zero forms is undefined")]
    GcdOfZeroForms,
}
