//! Exact dense linear algebra over Q(√5) and integer lattices.

mod elim;
mod lattice;
mod matrix;

pub use elim::{determinant, inverse, kernel_basis, rank, rref, solve_affine, AffineSolution};
pub use lattice::{
    clear_rational, hnf, image_lattice_basis, int_determinant, integer_kernel, lattice_index, Hnf,
    IVec, IntegerLatticeBasis,
};
pub use matrix::{dot, GoldenMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("rows have different lengths")]
    Ragged,
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix has irrational entries where a rational one is required")]
    NonRational,
    #[error("lattice ranks differ ({sub} vs {sup})")]
    RankMismatch { sub: usize, sup: usize },
    #[error("lattice is not contained in the claimed superlattice")]
    NotSublattice,
}
