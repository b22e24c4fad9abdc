use num_traits::Zero;
use serde::Serialize;

use super::GeometryError;
use crate::goldfield::{GVec, GoldenScalar};
use crate::linalg::dot;

/// Three-valued point location.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Inside,
    Boundary,
    Outside,
}

impl Membership {
    pub fn accepted(self) -> bool {
        self != Membership::Outside
    }
}

/// `lower ≤ ⟨normal, x⟩ ≤ upper`; an equality when `lower == upper`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Constraint {
    pub normal: GVec,
    pub lower: GoldenScalar,
    pub upper: GoldenScalar,
}

impl Constraint {
    pub fn is_equality(&self) -> bool {
        self.lower == self.upper
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfspaceRep {
    pub dim: usize,
    pub constraints: Vec<Constraint>,
}

impl HalfspaceRep {
    pub fn contains(&self, p: &[GoldenScalar]) -> Result<Membership, GeometryError> {
        if p.len() != self.dim {
            return Err(GeometryError::DimensionMismatch { expected: self.dim, found: p.len() });
        }
        let mut tight = false;
        for c in &self.constraints {
            let v = dot(&c.normal, p);
            if v < c.lower || v > c.upper {
                return Ok(Membership::Outside);
            }
            if !c.is_equality() && (v == c.lower || v == c.upper) {
                tight = true;
            }
        }
        Ok(if tight { Membership::Boundary } else { Membership::Inside })
    }

    pub fn slabs(&self) -> impl Iterator<Item = &Constraint> {
        self.constraints.iter().filter(|c| !c.is_equality())
    }

    pub fn equalities(&self) -> impl Iterator<Item = &Constraint> {
        self.constraints.iter().filter(|c| c.is_equality())
    }
}

/// Scales `v` so that its first nonzero coordinate is 1; `None` for the zero vector.
pub fn canonical_direction(v: &[GoldenScalar]) -> Option<GVec> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    let inv = lead.recip().expect("nonzero");
    Some(v.iter().map(|x| x * &inv).collect())
}

/// Slab spanned by the extreme values of `⟨normal, pᵢ⟩` over `points`.
pub fn support_slab(normal: GVec, points: &[GVec]) -> Constraint {
    let mut vals = points.iter().map(|p| dot(&normal, p));
    let first = vals.next().unwrap_or_else(GoldenScalar::zero);
    let (lower, upper) = vals.fold((first.clone(), first), |(lo, hi), v| {
        (if v < lo { v.clone() } else { lo }, if v > hi { v } else { hi })
    });
    Constraint { normal, lower, upper }
}
