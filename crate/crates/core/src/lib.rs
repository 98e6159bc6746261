//! Exact-arithmetic toolkit for torus-equivariant geometry of genus-12
//! Fano threefolds.
//!
//! Everything here is computed over exact coefficient fields (arbitrary
//! precision rationals and the real quadratic extension containing the
//! golden ratio), so every check is a zero-tolerance identity rather than
//! a numerical approximation. The crate is organised bottom-up:
//!
//! * [`field`] — coefficient fields `QQ` and `QQ(sqrt5)`
//! * [`poly`] — sparse multivariate polynomials, binary forms, factorization
//! * [`linalg`] — dense exact row reduction, kernels, linear solving
//! * [`geom`] — weighted projective spaces, parametrized curves and
//!   surfaces, quadrics, linear subspaces, intersection divisors
//! * [`ideals`] — graded pieces of ideals via evaluation-matrix kernels
//! * [`pencil`] — pencils of quadrics and their discriminants
//! * [`blowup`] — intersection numbers on the blowup of a threefold
//!   along a smooth curve
//! * [`pipeline`] — the end-to-end scenario computations (boundary
//!   surface, quadric identification, degeneration checks)
//! * [`report`] — the batch check registry and report emission

pub mod blowup;
pub mod field;
pub mod geom;
pub mod ideals;
pub mod linalg;
pub mod pencil;
// pub mod pipeline;
pub mod poly;
// pub mod report;

pub use field::{Field, FieldError, QuadExt, Rational};
pub use geom::{
    CoordPermutation, LinearSubspace, P1Divisor, ParamCurve, ParamSurface, ProjPoint, QuadricForm,
    WeightedProjSpace,
};
pub use linalg::Matrix;
pub use pencil::QuadricPencil;
pub use poly::{BinaryForm, MultiPoly, UniPoly, WeightVector};
// pub use report::{CheckResult, CheckStatus, Report, ReportFormat};
