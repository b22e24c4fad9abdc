//! Point-set generators: strip projection by exhaustive box search and by
//! neighbor BFS, and the coset construction over the reduced scheme.

mod compare;
mod generate;
mod graph;
mod pattern;
mod strip;

pub use compare::{boundary_artifacts_only, equivalence_check, symmetry_defects, EquivalenceReport};
pub use generate::{
    bfs_margin, coordinate_bounds, find_seed, generate_baake_moody, generate_bfs, generate_box, SEED_BOX,
};
pub use graph::{neighbor_graph, neighbor_vector_error, occupancy_stats, NeighborGraph, OccupancyStats};
pub use pattern::{Pattern, PatternPoint};
pub use strip::{centered_shift, generic_shift, parse_shift, Ball, Strip};

use crate::geometry::{GeometryError, Membership};
use crate::scheme::SchemeError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(String),
    #[error("shift has {found} coordinates, expected {expected}")]
    ShiftLength { expected: usize, found: usize },
    #[error("seed {0:?} is not an accepted point inside the ball")]
    SeedRejected(Vec<i64>),
    #[error("no accepted point inside the ball within the seed box [-2,2]^k")]
    NoSeed,
    #[error("pattern reaches only {have} edge units past the counted radius; every cluster vector must fit")]
    MarginUnavailable { have: String },
    #[error("reduced scheme was built for a different shift")]
    ShiftMismatch,
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Three-valued test `π⊥x ∈ K + π⊥γ`.
pub fn strip_accepts(strip: &Strip, x: &[i64]) -> Membership {
    strip.accepts(x)
}
