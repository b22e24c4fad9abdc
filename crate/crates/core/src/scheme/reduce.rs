use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{ProjectorSet, SchemeError};
use crate::geometry::{project_slice, zonotope_facets, AtomicSurface, Membership, SliceSystem, Zonotope};
use crate::goldfield::{GVec, GoldenScalar, Rational};
use crate::linalg::{clear_rational, hnf, image_lattice_basis, integer_kernel, IntegerLatticeBasis};

/// One coset `z + L` of the rational-hull lattice and its atomic surface.
#[derive(Debug, Clone, Serialize)]
pub struct CosetSlice {
    /// Integer representative, reduced modulo L.
    pub z: Vec<i64>,
    /// `π″z`, the offset of the slice.
    pub offset: GVec,
    /// `π′((cube + γ) ∩ {π″x = offset})`, in ambient coordinates.
    pub surface: AtomicSurface,
    pub has_interior: bool,
    /// The offset sits on the boundary of `π″(cube + γ)`, so every point of
    /// this coset lies on the boundary of the full window.
    pub offset_boundary: bool,
}

/// Cut-and-project data over the rational hull `E ⊕ E′`.
#[derive(Debug, Clone, Serialize)]
pub struct ReducedScheme {
    pub projectors: ProjectorSet,
    /// `(π + π′)(Zᵏ)`.
    pub cal_l: IntegerLatticeBasis,
    /// `Zᵏ ∩ ker π″`.
    pub l: IntegerLatticeBasis,
    pub cosets: Vec<CosetSlice>,
    pub shift: GVec,
    /// Number of cosets whose surface has interior.
    pub m: usize,
}

/// Reduces `z` modulo the rows of an HNF lattice basis (denominator 1).
pub fn reduce_mod_lattice(z: &[BigInt], l: &IntegerLatticeBasis) -> Vec<BigInt> {
    debug_assert!(l.denom == BigInt::from(1));
    let mut z = z.to_vec();
    for (row, p) in l.basis.iter().zip(l.pivots()) {
        let q = z[p].div_floor(&row[p]);
        if !q.is_zero() {
            for (x, r) in z.iter_mut().zip(row) {
                *x -= &q * r;
            }
        }
    }
    z
}

/// Builds the reduced scheme for the strip through `[0,1]ᵏ + γ`.
pub fn reduce(projectors: &ProjectorSet, gamma: &[GoldenScalar]) -> Result<ReducedScheme, SchemeError> {
    let k = projectors.k();
    if gamma.len() != k {
        return Err(SchemeError::ShiftLength { expected: k, found: gamma.len() });
    }
    let pd = &projectors.pi_dprime;
    let hull_proj = &projectors.pi + &projectors.pi_prime;
    let cal_l = image_lattice_basis(&hull_proj)?;
    let l = integer_kernel(pd)?;

    // Offsets: lattice points of π″(Zᵏ) inside the zonotope π″(cube + γ).
    let (den, rows) = clear_rational(pd)?;
    let cols: Vec<Vec<BigInt>> = (0..k).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
    let h = hnf(&cols, k);
    let window = Zonotope::from_projector(pd, gamma)?;
    let hrep = zonotope_facets(&window)?;
    let mut bbox = Vec::with_capacity(k);
    for p in 0..k {
        let (mut lo, mut hi) = (window.base[p].clone(), window.base[p].clone());
        for g in &window.generators {
            match g[p].signum() {
                1 => hi += &g[p],
                -1 => lo += &g[p],
                _ => {}
            }
        }
        bbox.push((lo, hi));
    }
    let denq = Rational::from(den.clone());
    let mut leaves: Vec<Vec<BigInt>> = Vec::new();
    let mut stack: Vec<(usize, Vec<BigInt>, Vec<BigInt>)> = vec![(0, vec![BigInt::zero(); k], vec![])];
    while let Some((i, acc, ts)) = stack.pop() {
        if i == h.rank() {
            leaves.push(ts);
            continue;
        }
        let p = h.pivots[i];
        let piv = &h.h[i][p];
        let lo = &bbox[p].0.scale(&denq) - &GoldenScalar::from(Rational::from(acc[p].clone()));
        let hi = &bbox[p].1.scale(&denq) - &GoldenScalar::from(Rational::from(acc[p].clone()));
        let inv = Rational::from_bigints(BigInt::from(1), piv.clone());
        let (tmin, tmax) = (lo.scale(&inv).ceil(), hi.scale(&inv).floor());
        let mut t = tmax;
        while t >= tmin {
            let next: Vec<BigInt> = acc.iter().zip(&h.h[i]).map(|(a, r)| a + &t * r).collect();
            let mut ts2 = ts.clone();
            ts2.push(t.clone());
            stack.push((i + 1, next, ts2));
            t -= 1;
        }
    }
    leaves.sort();
    let mut candidates = Vec::new();
    for ts in leaves {
        let mut z = vec![BigInt::zero(); k];
        for (t, u) in ts.iter().zip(&h.u) {
            for (zj, uj) in z.iter_mut().zip(u) {
                *zj += t * uj;
            }
        }
        let z = reduce_mod_lattice(&z, &l);
        let z: Vec<i64> = z.iter().map(|v| v.to_i64().expect("small representative")).collect();
        let offset = pd.mul_int_vec(&z);
        let m = hrep.contains(&offset)?;
        if m.accepted() {
            candidates.push((z, offset, m == Membership::Boundary));
        }
    }
    candidates.sort_by(|a, b| a.1.cmp(&b.1));

    let sys = SliceSystem::new(pd);
    let cosets: Vec<CosetSlice> = candidates
        .into_par_iter()
        .map(|(z, offset, offset_boundary)| {
            let surface = project_slice(&sys, &projectors.pi_prime, &offset, gamma);
            let has_interior = surface.has_interior();
            CosetSlice { z, offset, surface, has_interior, offset_boundary }
        })
        .filter(|c| !c.surface.is_empty())
        .collect();
    let m = cosets.iter().filter(|c| c.has_interior).count();
    Ok(ReducedScheme { projectors: projectors.clone(), cal_l, l, cosets, shift: gamma.to_vec(), m })
}
