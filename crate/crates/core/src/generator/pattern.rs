use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{neighbor_graph, GeneratorError, Strip};
use crate::goldfield::{GVec, Rational};
use crate::round_sig;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternPoint {
    /// Unit-lattice superspace coordinates.
    pub lattice: Vec<i64>,
    /// Physical coordinates, 12 significant digits.
    pub phys: Vec<f64>,
    pub boundary: bool,
}

/// Accepted lattice points within a physical ball, in lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct Pattern {
    pub cluster: String,
    pub gamma: GVec,
    /// Ball radius in edge units.
    pub radius: Rational,
    pub kappa_float: f64,
    pub points: Vec<PatternPoint>,
}

#[derive(Serialize, Deserialize)]
struct PatternFile {
    cluster: String,
    gamma: GVec,
    radius: String,
    kappa_float: f64,
    points: Vec<PatternPoint>,
    #[serde(default)]
    edges: Vec<(usize, usize, i32)>,
}

impl Pattern {
    /// Sorts and deduplicates `hits` (point, on-boundary) and attaches physical coordinates.
    pub fn from_hits(strip: &Strip, radius: &Rational, mut hits: Vec<(Vec<i64>, bool)>) -> Self {
        hits.sort();
        hits.dedup_by(|a, b| a.0 == b.0);
        let points = hits
            .into_par_iter()
            .map(|(lattice, boundary)| PatternPoint { phys: strip.phys(&lattice), lattice, boundary })
            .collect();
        Pattern {
            cluster: strip.cluster.name.clone(),
            gamma: strip.gamma.clone(),
            radius: radius.clone(),
            kappa_float: round_sig(strip.projectors.kappa_f64()),
            points,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn lattice_points(&self) -> impl Iterator<Item = &[i64]> {
        self.points.iter().map(|p| p.lattice.as_slice())
    }

    pub fn boundary_points(&self) -> impl Iterator<Item = &[i64]> {
        self.points.iter().filter(|p| p.boundary).map(|p| p.lattice.as_slice())
    }

    pub fn index_of(&self, x: &[i64]) -> Option<usize> {
        self.points.binary_search_by(|p| p.lattice.as_slice().cmp(x)).ok()
    }

    /// Physical dimension, 0 when no embedding was available.
    pub fn phys_dim(&self) -> usize {
        self.points.first().map_or(0, |p| p.phys.len())
    }

    /// Pretty JSON including the neighbor edges.
    pub fn to_json_string(&self) -> String {
        let graph = neighbor_graph(self);
        let file = PatternFile {
            cluster: self.cluster.clone(),
            gamma: self.gamma.clone(),
            radius: self.radius.to_string(),
            kappa_float: self.kappa_float,
            points: self.points.clone(),
            edges: graph.edges,
        };
        serde_json::to_string_pretty(&file).expect("pattern serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self, GeneratorError> {
        let f: PatternFile = serde_json::from_str(s).map_err(|e| GeneratorError::Format(e.to_string()))?;
        let radius = f.radius.parse().map_err(|e| GeneratorError::Format(format!("radius: {e}")))?;
        let mut points = f.points;
        let sorted = points.windows(2).all(|w| w[0].lattice < w[1].lattice);
        if !sorted {
            points.sort_by(|a, b| a.lattice.cmp(&b.lattice));
            points.dedup_by(|a, b| a.lattice == b.lattice);
        }
        Ok(Pattern { cluster: f.cluster, gamma: f.gamma, radius, kappa_float: f.kappa_float, points })
    }
}
