use std::collections::HashSet;

use serde::Serialize;

use super::{Pattern, Strip};
use crate::cluster::SignedPermutation;
use crate::goldfield::GVec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    /// Cluster, shift or radius differences; the sets are still compared.
    pub parameter_mismatch: Vec<String>,
    pub only_first: Vec<Vec<i64>>,
    pub only_second: Vec<Vec<i64>>,
    /// Points in both sets whose boundary flags disagree.
    pub flag_mismatch: Vec<Vec<i64>>,
}

impl EquivalenceReport {
    /// Exact equality of the two point sets.
    pub fn sets_equal(&self) -> bool {
        self.only_first.is_empty() && self.only_second.is_empty()
    }

    pub fn is_equal(&self) -> bool {
        self.sets_equal() && self.parameter_mismatch.is_empty()
    }

    pub fn difference_count(&self) -> usize {
        self.only_first.len() + self.only_second.len()
    }
}

/// Set comparison of two patterns. A difference is a boundary-policy artifact
/// when every differing point is flagged as boundary where it appears.
pub fn equivalence_check(p1: &Pattern, p2: &Pattern) -> EquivalenceReport {
    let mut parameter_mismatch = Vec::new();
    if p1.cluster != p2.cluster {
        parameter_mismatch.push(format!("cluster {} vs {}", p1.cluster, p2.cluster));
    }
    if p1.gamma != p2.gamma {
        parameter_mismatch.push("shift".to_string());
    }
    if p1.radius != p2.radius {
        parameter_mismatch.push(format!("radius {} vs {}", p1.radius, p2.radius));
    }
    let mut only_first = Vec::new();
    let mut only_second = Vec::new();
    let mut flag_mismatch = Vec::new();
    let (mut i, mut j) = (0, 0);
    let (a, b) = (&p1.points, &p2.points);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x.lattice == y.lattice => {
                if x.boundary != y.boundary {
                    flag_mismatch.push(x.lattice.clone());
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x.lattice < y.lattice => {
                only_first.push(x.lattice.clone());
                i += 1;
            }
            (Some(x), None) => {
                only_first.push(x.lattice.clone());
                i += 1;
            }
            (_, Some(y)) => {
                only_second.push(y.lattice.clone());
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    EquivalenceReport { parameter_mismatch, only_first, only_second, flag_mismatch }
}

/// True when every differing point carries a boundary flag in its pattern.
pub fn boundary_artifacts_only(report: &EquivalenceReport, p1: &Pattern, p2: &Pattern) -> bool {
    let flagged = |p: &Pattern, x: &Vec<i64>| p.index_of(x).is_some_and(|i| p.points[i].boundary);
    report.only_first.iter().all(|x| flagged(p1, x)) && report.only_second.iter().all(|x| flagged(p2, x))
}

/// Points `x` for which the physical image `π(gx)` is not the image of any
/// pattern point. Compared exactly in Q(√5); lattice points sharing a
/// physical position (a kernel of π meeting Zᵏ) are identified.
pub fn symmetry_defects(strip: &Strip, p: &Pattern, g: &SignedPermutation) -> Vec<Vec<i64>> {
    let pi = &strip.projectors.pi;
    let images: HashSet<GVec> = p.lattice_points().map(|x| pi.mul_int_vec(x)).collect();
    p.lattice_points().filter(|x| !images.contains(&pi.mul_int_vec(&g.apply_int(x)))).map(<[i64]>::to_vec).collect()
}
