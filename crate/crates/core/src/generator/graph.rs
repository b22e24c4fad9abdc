use serde::Serialize;

use super::{GeneratorError, Pattern, Strip};
use crate::goldfield::Rational;

/// Arithmetic-neighbor graph: `(i, j, l)` means `x_j − x_i = ε_l` (1-based),
/// read as label `−l` from `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborGraph {
    pub k: usize,
    pub edges: Vec<(usize, usize, i32)>,
    pub adjacency: Vec<Vec<(usize, i32)>>,
}

impl NeighborGraph {
    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }
}

pub fn neighbor_graph(p: &Pattern) -> NeighborGraph {
    let k = p.points.first().map_or(0, |q| q.lattice.len());
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); p.len()];
    for (i, q) in p.points.iter().enumerate() {
        let mut y = q.lattice.clone();
        for l in 0..k {
            y[l] += 1;
            if let Some(j) = p.index_of(&y) {
                let label = l as i32 + 1;
                edges.push((i, j, label));
                adjacency[i].push((j, label));
                adjacency[j].push((i, -label));
            }
            y[l] -= 1;
        }
    }
    edges.sort_unstable();
    for a in &mut adjacency {
        a.sort_unstable();
    }
    NeighborGraph { k, edges, adjacency }
}

/// Largest deviation of an edge's physical difference from its cluster vector.
/// `None` when the pattern has no physical coordinates.
pub fn neighbor_vector_error(p: &Pattern, g: &NeighborGraph, embedding: &[Vec<f64>]) -> Option<f64> {
    if p.phys_dim() == 0 {
        return None;
    }
    let mut worst: f64 = 0.0;
    for &(i, j, l) in &g.edges {
        let e = &embedding[(l - 1) as usize];
        for ((a, b), c) in p.points[j].phys.iter().zip(&p.points[i].phys).zip(e) {
            worst = worst.max((a - b - c).abs());
        }
    }
    Some(worst)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OccupancyStats {
    /// `histogram[d]` counts counted points with `d` accepted neighbors.
    pub histogram: Vec<usize>,
    pub counted: usize,
    pub fully_occupied: usize,
    #[serde(serialize_with = "as_string")]
    pub fully_occupied_fraction: Rational,
    #[serde(serialize_with = "as_string")]
    pub inner_radius: Rational,
}

fn as_string<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl OccupancyStats {
    pub fn fraction_f64(&self) -> f64 {
        self.fully_occupied_fraction.to_f64()
    }
}

/// Degree histogram of the points within `inner_radius`. The pattern must
/// reach far enough beyond it that every neighbor of a counted point was
/// generated: `(R − r)·|ε₁| ≥ |εᵢ|` for every cluster vector.
pub fn occupancy_stats(
    strip: &Strip,
    p: &Pattern,
    g: &NeighborGraph,
    inner_radius: &Rational,
) -> Result<OccupancyStats, GeneratorError> {
    let gap = &p.radius - inner_radius;
    let gap_sq = strip.edge_sq().scale(&(&gap * &gap));
    let k = strip.k();
    if gap.signum() < 0 || (0..k).any(|i| &gap_sq < strip.projectors.pi.get(i, i)) {
        return Err(GeneratorError::MarginUnavailable { have: gap.to_string() });
    }
    let ball = strip.ball(inner_radius);
    let mut histogram = vec![0usize; 2 * k + 1];
    for (i, q) in p.points.iter().enumerate() {
        if ball.contains(&q.lattice) {
            histogram[g.degree(i)] += 1;
        }
    }
    let counted: usize = histogram.iter().sum();
    let fully_occupied = histogram[2 * k];
    let fully_occupied_fraction =
        if counted == 0 { Rational::from(0) } else { Rational::new(fully_occupied as i64, counted as i64) };
    Ok(OccupancyStats { histogram, counted, fully_occupied, fully_occupied_fraction, inner_radius: inner_radius.clone() })
}
