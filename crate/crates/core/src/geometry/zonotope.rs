use std::collections::HashSet;

use num_traits::Zero;
use rayon::prelude::*;

use super::halfspace::canonical_direction;
use super::{Constraint, GeometryError, HalfspaceRep, Membership};
use crate::goldfield::{GVec, GoldenScalar};
use crate::linalg::{dot, kernel_basis, rank, rref, GoldenMatrix};

/// `base + Σ [0,1]·gᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zonotope {
    pub base: GVec,
    pub generators: Vec<GVec>,
}

impl Zonotope {
    pub fn new(base: GVec, generators: Vec<GVec>) -> Result<Self, GeometryError> {
        let m = base.len();
        if let Some(g) = generators.iter().find(|g| g.len() != m) {
            return Err(GeometryError::DimensionMismatch { expected: m, found: g.len() });
        }
        Ok(Zonotope { base, generators })
    }

    pub fn ambient(&self) -> usize {
        self.base.len()
    }

    /// Columns of `m` as generators, translated by `m·shift`.
    pub fn from_projector(m: &GoldenMatrix, shift: &[GoldenScalar]) -> Result<Self, GeometryError> {
        let base = m.mul_vec(shift).map_err(|e| GeometryError::Degenerate(e.to_string()))?;
        Zonotope::new(base, (0..m.cols()).map(|j| m.col(j)).collect())
    }

    fn support(&self, n: &[GoldenScalar]) -> (GoldenScalar, GoldenScalar) {
        let b = dot(n, &self.base);
        let (mut lo, mut hi) = (b.clone(), b);
        for g in &self.generators {
            let v = dot(n, g);
            match v.signum() {
                1 => hi += &v,
                -1 => lo += &v,
                _ => {}
            }
        }
        (lo, hi)
    }
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..r).collect();
    if r > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..r).rev().find(|&i| cur[i] != i + n - r) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Exact H-representation of a zonotope: equality constraints for the
/// directions orthogonal to its span, and one tight slab per facet direction.
pub fn zonotope_facets(z: &Zonotope) -> Result<HalfspaceRep, GeometryError> {
    let m = z.ambient();
    let gm = if z.generators.is_empty() {
        GoldenMatrix::zeros(0, m)
    } else {
        GoldenMatrix::from_rows(z.generators.clone()).map_err(|e| GeometryError::Degenerate(e.to_string()))?
    };
    let mut constraints = Vec::new();
    for n in kernel_basis(&gm) {
        let n = canonical_direction(&n).expect("kernel vectors are nonzero");
        let v = dot(&n, &z.base);
        constraints.push(Constraint { normal: n, lower: v.clone(), upper: v });
    }
    let r = rank(&gm);
    if r == 0 {
        return Ok(HalfspaceRep { dim: m, constraints });
    }
    let (red, pivots) = rref(&gm);
    let basis: Vec<GVec> = (0..pivots.len()).map(|i| red.row(i).to_vec()).collect();
    // Coordinates of each generator against the span basis: ⟨gᵢ, d_a⟩.
    let gram: Vec<GVec> = z.generators.iter().map(|g| basis.iter().map(|d| dot(g, d)).collect()).collect();
    let candidates: Vec<Option<GVec>> = subsets(z.generators.len(), r - 1)
        .into_par_iter()
        .map(|s| {
            let a = GoldenMatrix::from_fn(s.len(), r, |i, j| gram[s[i]][j].clone());
            let ker = kernel_basis(&a);
            if ker.len() != 1 {
                return None;
            }
            let t = &ker[0];
            let mut n = vec![GoldenScalar::zero(); m];
            for (ta, d) in t.iter().zip(&basis) {
                if !ta.is_zero() {
                    for (x, y) in n.iter_mut().zip(d) {
                        *x += &(ta * y);
                    }
                }
            }
            canonical_direction(&n)
        })
        .collect();
    let mut seen = HashSet::new();
    for n in candidates.into_iter().flatten() {
        if seen.insert(n.clone()) {
            let (lower, upper) = z.support(&n);
            constraints.push(Constraint { normal: n, lower, upper });
        }
    }
    Ok(HalfspaceRep { dim: m, constraints })
}

pub fn zonotope_contains(h: &HalfspaceRep, p: &[GoldenScalar]) -> Result<Membership, GeometryError> {
    h.contains(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> GVec {
        xs.iter().map(|&x| GoldenScalar::from_int(x)).collect()
    }

    #[test]
    fn unit_square() {
        let z = Zonotope::new(v(&[0, 0]), vec![v(&[1, 0]), v(&[0, 1])]).unwrap();
        let h = zonotope_facets(&z).unwrap();
        assert_eq!(h.constraints.len(), 2);
        for c in &h.constraints {
            assert!(c.lower.is_zero());
            assert_eq!(c.upper, GoldenScalar::from_int(1));
        }
        assert_eq!(h.contains(&v(&[0, 0])).unwrap(), Membership::Boundary);
        assert_eq!(h.contains(&v(&[2, 0])).unwrap(), Membership::Outside);
        let half = GoldenScalar::frac(1, 2, 0, 1);
        assert_eq!(h.contains(&[half.clone(), half]).unwrap(), Membership::Inside);
    }

    #[test]
    fn flat_zonotope_gets_equalities() {
        let z = Zonotope::new(v(&[0, 0, 1]), vec![v(&[1, 1, 0]), v(&[1, -1, 0])]).unwrap();
        let h = zonotope_facets(&z).unwrap();
        assert_eq!(h.equalities().count(), 1);
        assert_eq!(h.contains(&v(&[1, 0, 1])).unwrap(), Membership::Inside);
        assert_eq!(h.contains(&v(&[0, 0, 1])).unwrap(), Membership::Boundary);
        assert_eq!(h.contains(&v(&[1, 0, 0])).unwrap(), Membership::Outside);
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
