//! Symmetric clusters given by Gram matrices and signed-permutation group actions.

mod catalog;
mod perm;
mod spec;

pub use catalog::{
    catalog, decagon, dodecahedron, dodecahedron_vectors, gram_of, icosahedral_rotations, icosahedron,
    icosahedron_vectors, icosidodecahedron, orbit_representatives, signed_permutation_of, two_shell, CATALOG_NAMES,
};
pub use perm::{close_group, GroupClosure, SignedPermutation, DEFAULT_CLOSURE_BOUND};
pub use spec::{ClusterFile, ClusterSpec, GeneratorFile, Relation, ValidationIssue, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClusterError {
    #[error("invalid signed permutation: {0}")]
    BadPermutation(String),
    #[error("group closure exceeded {0} elements")]
    ClosureBound(usize),
    #[error("unknown cluster {0:?}")]
    UnknownCluster(String),
    #[error("{0}")]
    BadParameter(String),
    #[error("relation word {0:?} uses an unknown generator")]
    BadRelation(String),
    #[error("vector {0} is not mapped into the cluster")]
    NotInvariant(usize),
    #[error("malformed cluster definition: {0}")]
    Format(String),
}
