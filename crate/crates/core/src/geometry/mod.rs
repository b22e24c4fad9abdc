//! Exact convex geometry: zonotope windows, cube slices, atomic surfaces.

mod halfspace;
mod hull;
mod lp;
mod slice;
mod surface;
mod zonotope;

pub use halfspace::{canonical_direction, support_slab, Constraint, HalfspaceRep, Membership};
pub use hull::{hull, Hull};
pub use lp::{in_convex_hull, interior_margin, maximize, LpOutcome};
pub use slice::{project_slice, slice_and_project, SliceSystem};
pub use surface::{compile_halfspaces, AtomicSurface, CompiledSurface};
pub use zonotope::{zonotope_contains, zonotope_facets, Zonotope};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
}
