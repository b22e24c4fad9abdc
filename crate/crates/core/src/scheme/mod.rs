//! Superspace projectors and the reduction of a strip projection to a
//! cut-and-project scheme over the rational hull with polytopal atomic surfaces.

mod projectors;
mod reduce;

pub use projectors::{
    build_projectors, check_embedding, check_invariance, EmbeddingReport, InvarianceReport, ProjectorSet,
    EMBEDDING_TOLERANCE,
};
pub use reduce::{reduce, reduce_mod_lattice, CosetSlice, ReducedScheme};

use crate::geometry::GeometryError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchemeError {
    #[error("projector is not idempotent: {0}")]
    IdempotenceFailure(String),
    #[error("the Galois conjugate of pi is not a projector orthogonal to pi")]
    ConjugateNotProjector,
    #[error("I - pi - pi' has an irrational entry")]
    RationalityFailure,
    #[error("cluster has no floating embedding")]
    MissingEmbedding,
    #[error("shift has {found} coordinates, expected {expected}")]
    ShiftLength { expected: usize, found: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
