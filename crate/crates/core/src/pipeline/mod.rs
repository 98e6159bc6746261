//! End-to-end scenario computations: the orbit-boundary surface and its
//! unique quadric, the branch curve over the golden-ratio extension and
//! the identification of the distinguished pencil member, plus the
//! base-locus-surface and cone-degeneration certificates.
//!
//! Each stage re-verifies its inputs by independent substitution rather
//! than trusting upstream kernels, and hard-fails with a typed error if
//! any exact identity is off.

mod bidegree;
mod boundary;
mod scenarios;

pub use bidegree::{surface_degree_by_bidegree_count, DegreeCert};
pub use boundary::{
    boundary_surface, canonical_parameter_pair, identify_special_quadric, BoundarySurface,
    BranchCurve, DiagonalImage, QuadricIdentification, UniqueQuadric,
};
pub use scenarios::{
    quotient_parametrization, verify_base_locus_surface, verify_boundary_singularities,
    verify_cone_degeneration, verify_orbit_conic, BaseLocusCert, ConeCert, OrbitConicCert,
    SingularLociCert,
};

use thiserror::Error;

use crate::geom::GeomError;
use crate::pencil::PencilError;
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("boundary expansion mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("expected a one-dimensional space of quadrics, found dimension {0}")]
    QuadricSpaceDimension(usize),
    #[error("proportionality check failed: {0}")]
    Proportionality(String),
    #[error("substituted quadric is not a scalar multiple of a rational one")]
    NotRationalAfterScaling,
    #[error("quadric is not a member of the pencil")]
    NotInPencil,
    #[error("degree count did not stabilize: {0}")]
    DegreeCount(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
