//! Exact cut-and-project generation of icosahedral and decagonal quasiperiodic
//! point sets over Q(√5).

pub mod cluster;
pub mod generator;
pub mod geometry;
pub mod goldfield;
pub mod linalg;
pub mod render;
pub mod scheme;

pub use cluster::{catalog, ClusterSpec, SignedPermutation};
pub use generator::{GeneratorError, Pattern, Strip};
pub use geometry::Membership;
pub use goldfield::{GVec, GoldenScalar, Rational};
pub use scheme::{ProjectorSet, ReducedScheme};

/// Rounds to 12 significant digits for floating output.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let s = format!("{x:.11e}");
    s.parse().unwrap_or(x)
}
