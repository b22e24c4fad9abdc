//! Exact arithmetic in Q and in the real quadratic field Q(√5).

mod fast;
mod golden;
mod rational;

pub use fast::{clear_denominators, IntGolden, IntQuadratic, IntSlab};
pub use golden::{GoldenError, GoldenScalar};
pub use rational::{ParseRationalError, Rational};

/// Exact vector over Q(√5).
pub type GVec = Vec<GoldenScalar>;
