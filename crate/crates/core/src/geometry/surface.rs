use num_traits::Zero;
use serde::Serialize;

use super::halfspace::canonical_direction;
use super::hull::hull;
use super::lp::interior_margin;
use super::{Constraint, GeometryError, HalfspaceRep, Membership};
use crate::goldfield::{GVec, GoldenScalar, IntSlab};
use crate::linalg::{dot, kernel_basis, rref, GoldenMatrix};

/// A convex polytope in an ambient coordinate space, stored by its extreme points.
///
/// Membership uses facet slabs in a coordinate chart of the affine hull when
/// the polytope has dimension at most three, and an exact LP otherwise.
#[derive(Debug, Clone, Serialize)]
pub struct AtomicSurface {
    pub ambient: usize,
    /// Dimension of the space the surface is meant to fill; interior is relative to it.
    pub full_dim: usize,
    /// Extreme points in lexicographic order.
    pub vertices: Vec<GVec>,
    /// Affine dimension, `None` when empty.
    pub dim: Option<usize>,
    /// Coordinates that chart the affine hull injectively.
    pub chart: Vec<usize>,
    /// Equalities cutting out the affine hull in ambient coordinates.
    pub equalities: Vec<Constraint>,
    /// Facet slabs in chart coordinates.
    pub facets: Option<HalfspaceRep>,
}

impl AtomicSurface {
    pub fn empty(ambient: usize, full_dim: usize) -> Self {
        AtomicSurface {
            ambient,
            full_dim,
            vertices: vec![],
            dim: None,
            chart: vec![],
            equalities: vec![],
            facets: None,
        }
    }

    /// Convex hull of `points` (duplicates allowed).
    pub fn from_points(ambient: usize, full_dim: usize, mut points: Vec<GVec>) -> Self {
        points.sort();
        points.dedup();
        if points.is_empty() {
            return Self::empty(ambient, full_dim);
        }
        let origin = points[0].clone();
        let diffs: Vec<GVec> = points[1..]
            .iter()
            .map(|p| p.iter().zip(&origin).map(|(a, b)| a - b).collect())
            .collect();
        let dmat = if diffs.is_empty() {
            GoldenMatrix::zeros(0, ambient)
        } else {
            GoldenMatrix::from_rows(diffs).expect("equal lengths")
        };
        let (_, chart) = rref(&dmat);
        let r = chart.len();
        let equalities = kernel_basis(&dmat)
            .into_iter()
            .map(|n| {
                let n = canonical_direction(&n).expect("nonzero kernel vector");
                let v = dot(&n, &origin);
                Constraint { normal: n, lower: v.clone(), upper: v }
            })
            .collect();
        let projected: Vec<GVec> = points.iter().map(|p| chart.iter().map(|&c| p[c].clone()).collect()).collect();
        let h = hull(&projected, r);
        let mut vertices: Vec<GVec> = h.vertices.iter().map(|&i| points[i].clone()).collect();
        vertices.sort();
        AtomicSurface {
            ambient,
            full_dim,
            vertices,
            dim: Some(r),
            chart,
            equalities,
            facets: h.facets.map(|constraints| HalfspaceRep { dim: r, constraints }),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.dim.is_none()
    }

    pub fn has_interior(&self) -> bool {
        self.dim == Some(self.full_dim)
    }

    pub fn contains(&self, p: &[GoldenScalar]) -> Result<Membership, GeometryError> {
        if p.len() != self.ambient {
            return Err(GeometryError::DimensionMismatch { expected: self.ambient, found: p.len() });
        }
        let Some(dim) = self.dim else {
            return Ok(Membership::Outside);
        };
        for e in &self.equalities {
            if dot(&e.normal, p) != e.lower {
                return Ok(Membership::Outside);
            }
        }
        let m = match &self.facets {
            Some(h) => {
                let q: GVec = self.chart.iter().map(|&c| p[c].clone()).collect();
                h.contains(&q)?
            }
            None => match interior_margin(p, &self.vertices) {
                Some(t) if t.signum() > 0 => Membership::Inside,
                Some(t) if t.is_zero() => Membership::Boundary,
                _ => Membership::Outside,
            },
        };
        Ok(if m == Membership::Inside && dim < self.full_dim { Membership::Boundary } else { m })
    }

    pub fn scaled(&self, lambda: &GoldenScalar) -> Self {
        let pts = self.vertices.iter().map(|v| v.iter().map(|x| x * lambda).collect()).collect();
        Self::from_points(self.ambient, self.full_dim, pts)
    }

    pub fn negated(&self) -> Self {
        self.scaled(&-GoldenScalar::from_int(1))
    }

    /// Per-coordinate `(min, max)` over the vertices.
    pub fn bounding_box(&self) -> Option<Vec<(GoldenScalar, GoldenScalar)>> {
        let first = self.vertices.first()?;
        let mut bb: Vec<(GoldenScalar, GoldenScalar)> = first.iter().map(|x| (x.clone(), x.clone())).collect();
        for v in &self.vertices[1..] {
            for (b, x) in bb.iter_mut().zip(v) {
                if *x < b.0 {
                    b.0 = x.clone();
                }
                if *x > b.1 {
                    b.1 = x.clone();
                }
            }
        }
        Some(bb)
    }

    /// Compiles the membership test of `M·y` for integer `y`, where `M` is the
    /// symmetric map into the ambient space (e.g. π′). `None` if the surface
    /// has no facet description or coefficients are too large.
    pub fn compile(&self, map: &GoldenMatrix) -> Option<CompiledSurface> {
        let facets = self.facets.as_ref()?;
        let lift = |n_chart: &[GoldenScalar]| -> GVec {
            let mut n = vec![GoldenScalar::zero(); self.ambient];
            for (&c, v) in self.chart.iter().zip(n_chart) {
                n[c] = v.clone();
            }
            map.mul_vec(&n).expect("square map")
        };
        let mut equalities = Vec::new();
        for e in &self.equalities {
            let w = map.mul_vec(&e.normal).expect("square map");
            equalities.push(IntSlab::compile(&w, &e.lower, &e.upper)?);
        }
        let mut slabs = Vec::new();
        for c in &facets.constraints {
            slabs.push(IntSlab::compile(&lift(&c.normal), &c.lower, &c.upper)?);
        }
        Some(CompiledSurface { equalities, slabs, lower_dim: self.dim != Some(self.full_dim) })
    }
}

/// Compiles `rep` evaluated at `M·y`, with the normals of `rep` given in the
/// ambient coordinates of `M`'s image.
pub fn compile_halfspaces(rep: &HalfspaceRep, map: &GoldenMatrix, lower_dim: bool) -> Option<CompiledSurface> {
    let mut equalities = Vec::new();
    let mut slabs = Vec::new();
    for c in &rep.constraints {
        let w = map.mul_vec(&c.normal).ok()?;
        let slab = IntSlab::compile(&w, &c.lower, &c.upper)?;
        if c.is_equality() {
            equalities.push(slab);
        } else {
            slabs.push(slab);
        }
    }
    Some(CompiledSurface { equalities, slabs, lower_dim })
}

/// Integer-evaluated facet tests for an [`AtomicSurface`] or a window.
#[derive(Debug, Clone)]
pub struct CompiledSurface {
    equalities: Vec<IntSlab>,
    slabs: Vec<IntSlab>,
    lower_dim: bool,
}

impl CompiledSurface {
    pub fn contains(&self, y: &[i64]) -> Membership {
        for e in &self.equalities {
            if e.margins(y) != (0, 0) {
                return Membership::Outside;
            }
        }
        let mut tight = self.lower_dim;
        for s in &self.slabs {
            let (lo, hi) = s.margins(y);
            if lo < 0 || hi < 0 {
                return Membership::Outside;
            }
            if lo == 0 || hi == 0 {
                tight = true;
            }
        }
        if tight {
            Membership::Boundary
        } else {
            Membership::Inside
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> GVec {
        xs.iter().map(|&x| GoldenScalar::from_int(x)).collect()
    }

    #[test]
    fn triangle_in_3d() {
        let s = AtomicSurface::from_points(3, 2, vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]), v(&[0, 0, 1])]);
        assert_eq!(s.dim, Some(2));
        assert_eq!(s.vertices.len(), 3);
        let third = GoldenScalar::frac(1, 3, 0, 1);
        assert_eq!(s.contains(&[third.clone(), third.clone(), third]).unwrap(), Membership::Inside);
        assert_eq!(s.contains(&v(&[1, 0, 0])).unwrap(), Membership::Boundary);
        assert_eq!(s.contains(&v(&[1, 1, -1])).unwrap(), Membership::Outside);
        assert_eq!(s.contains(&v(&[1, 1, 1])).unwrap(), Membership::Outside);
    }

    #[test]
    fn lower_dimensional_is_boundary() {
        let s = AtomicSurface::from_points(2, 2, vec![v(&[0, 0]), v(&[2, 2])]);
        assert_eq!(s.contains(&v(&[1, 1])).unwrap(), Membership::Boundary);
        let p = AtomicSurface::from_points(2, 2, vec![v(&[3, 4])]);
        assert_eq!(p.contains(&v(&[3, 4])).unwrap(), Membership::Boundary);
        assert_eq!(p.contains(&v(&[3, 5])).unwrap(), Membership::Outside);
        assert!(!p.has_interior());
    }

    #[test]
    fn extreme_filter_is_idempotent() {
        let pts = vec![v(&[0, 0]), v(&[4, 0]), v(&[0, 4]), v(&[1, 1]), v(&[2, 2])];
        let s = AtomicSurface::from_points(2, 2, pts);
        let again = AtomicSurface::from_points(2, 2, s.vertices.clone());
        assert_eq!(s.vertices, again.vertices);
        assert_eq!(s.vertices.len(), 3);
    }
}
