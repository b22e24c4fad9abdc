//! Vertices of a shifted unit cube cut by a rational affine subspace `{x : Px = c}`.

use std::collections::HashSet;

use rayon::prelude::*;

use super::AtomicSurface;
use crate::goldfield::{GVec, GoldenScalar};
use crate::linalg::{inverse, rank, rref, GoldenMatrix};

struct FreeSet {
    free: Vec<usize>,
    fixed: Vec<usize>,
    inv: GoldenMatrix,
    /// `inv · A[:, fixed]`.
    coupling: GoldenMatrix,
}

/// Precomputed data for slicing `[0,1]ᵏ + γ` with `{x : Px = c}` for many `c`.
pub struct SliceSystem {
    k: usize,
    rows: Vec<usize>,
    a: GoldenMatrix,
    free_sets: Vec<FreeSet>,
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

impl SliceSystem {
    pub fn new(p: &GoldenMatrix) -> Self {
        let k = p.cols();
        // Independent rows of P are the pivot columns of RREF(Pᵀ).
        let (_, rows) = rref(&p.transpose());
        let d = rows.len();
        let a = p.select(&rows, &(0..k).collect::<Vec<_>>());
        let free_sets = subsets(k, d)
            .into_par_iter()
            .filter_map(|free| {
                let af = a.select(&(0..d).collect::<Vec<_>>(), &free);
                if rank(&af) < d {
                    return None;
                }
                let inv = inverse(&af).ok()?;
                let fixed: Vec<usize> = (0..k).filter(|j| !free.contains(j)).collect();
                let coupling = &inv * &a.select(&(0..d).collect::<Vec<_>>(), &fixed);
                Some(FreeSet { free, fixed, inv, coupling })
            })
            .collect();
        SliceSystem { k, rows, a, free_sets }
    }

    pub fn codim(&self) -> usize {
        self.rows.len()
    }

    /// Vertices of `([0,1]ᵏ + γ) ∩ {x : Px = c}`, deduplicated and sorted.
    pub fn vertices(&self, c: &[GoldenScalar], gamma: &[GoldenScalar]) -> Vec<GVec> {
        let k = self.k;
        let d = self.rows.len();
        // With x = γ + δ: A δ = c_R − A γ.
        let ag = self.a.mul_vec(gamma).expect("shift length");
        let b: GVec = self.rows.iter().zip(&ag).map(|(&r, g)| &c[r] - g).collect();
        let one = GoldenScalar::from_int(1);
        let found: Vec<Vec<GVec>> = self
            .free_sets
            .par_iter()
            .map(|fs| {
                let mut out = Vec::new();
                let mut y = fs.inv.mul_vec(&b).expect("square");
                let nfix = k - d;
                let mut delta = vec![false; nfix];
                let total: u64 = 1 << nfix;
                for step in 0..total {
                    if step > 0 {
                        // Gray code: flip the lowest set bit position of `step`.
                        let bit = step.trailing_zeros() as usize;
                        delta[bit] = !delta[bit];
                        for (i, yi) in y.iter_mut().enumerate() {
                            let m = fs.coupling.get(i, bit);
                            if !m.is_zero() {
                                if delta[bit] {
                                    *yi -= m;
                                } else {
                                    *yi += m;
                                }
                            }
                        }
                    }
                    if y.iter().all(|v| v.signum() >= 0 && (&one - v).signum() >= 0) {
                        let mut x = gamma.to_vec();
                        for (j, &f) in fs.free.iter().enumerate() {
                            x[f] += &y[j];
                        }
                        for (j, &f) in fs.fixed.iter().enumerate() {
                            if delta[j] {
                                x[f] += &one;
                            }
                        }
                        out.push(x);
                    }
                }
                out
            })
            .collect();
        let mut seen = HashSet::new();
        let mut all: Vec<GVec> = found.into_iter().flatten().filter(|x| seen.insert(x.clone())).collect();
        all.sort();
        all
    }
}

/// Atomic surface `Q(([0,1]ᵏ + γ) ∩ {x : Px = c})` in the ambient coordinates of `Q`.
pub fn slice_and_project(
    p: &GoldenMatrix,
    q: &GoldenMatrix,
    c: &[GoldenScalar],
    gamma: &[GoldenScalar],
) -> AtomicSurface {
    let sys = SliceSystem::new(p);
    project_slice(&sys, q, c, gamma)
}

pub fn project_slice(sys: &SliceSystem, q: &GoldenMatrix, c: &[GoldenScalar], gamma: &[GoldenScalar]) -> AtomicSurface {
    let full_dim = rank(q);
    let pts = sys.vertices(c, gamma).iter().map(|x| q.mul_vec(x).expect("square")).collect();
    AtomicSurface::from_points(q.rows(), full_dim, pts)
}
