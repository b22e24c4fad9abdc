//! Exact convex hulls of full-dimensional point sets: extreme points and facet slabs.

use std::collections::{HashMap, HashSet};

use num_traits::Zero;

use super::halfspace::{canonical_direction, support_slab};
use super::lp::in_convex_hull;
use super::Constraint;
use crate::goldfield::{GVec, GoldenScalar};

pub struct Hull {
    /// Indices of the extreme points in the input.
    pub vertices: Vec<usize>,
    /// Facet slabs; `None` above three dimensions.
    pub facets: Option<Vec<Constraint>>,
}

fn sub(a: &[GoldenScalar], b: &[GoldenScalar]) -> GVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn cross2(o: &[GoldenScalar], a: &[GoldenScalar], b: &[GoldenScalar]) -> GoldenScalar {
    let (u, v) = (sub(a, o), sub(b, o));
    &(&u[0] * &v[1]) - &(&u[1] * &v[0])
}

fn cross3(u: &[GoldenScalar], v: &[GoldenScalar]) -> GVec {
    vec![
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

fn dot3(u: &[GoldenScalar], v: &[GoldenScalar]) -> GoldenScalar {
    &(&(&u[0] * &v[0]) + &(&u[1] * &v[1])) + &(&u[2] * &v[2])
}

/// Hull of distinct points spanning `R^dim`.
pub fn hull(points: &[GVec], dim: usize) -> Hull {
    match dim {
        0 => Hull { vertices: vec![0], facets: Some(vec![]) },
        1 => hull_1d(points),
        2 => hull_2d(points),
        3 => hull_3d(points),
        _ => Hull { vertices: extreme_by_lp(points), facets: None },
    }
}

fn slabs(normals: Vec<GVec>, vertices: &[GVec]) -> Vec<Constraint> {
    let mut seen = HashSet::new();
    normals
        .into_iter()
        .filter_map(|n| canonical_direction(&n))
        .filter(|n| seen.insert(n.clone()))
        .map(|n| support_slab(n, vertices))
        .collect()
}

fn hull_1d(points: &[GVec]) -> Hull {
    let lo = (0..points.len()).min_by(|&a, &b| points[a][0].cmp(&points[b][0])).expect("nonempty");
    let hi = (0..points.len()).max_by(|&a, &b| points[a][0].cmp(&points[b][0])).expect("nonempty");
    let verts = vec![points[lo].clone(), points[hi].clone()];
    Hull { vertices: vec![lo, hi], facets: Some(slabs(vec![vec![GoldenScalar::from_int(1)]], &verts)) }
}

fn hull_2d(points: &[GVec]) -> Hull {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| points[a].cmp(&points[b]));
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && cross2(&points[lower[lower.len() - 2]], &points[lower[lower.len() - 1]], &points[i]).signum() <= 0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && cross2(&points[upper[upper.len() - 2]], &points[upper[upper.len() - 1]], &points[i]).signum() <= 0
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let ring = lower;
    let verts: Vec<GVec> = ring.iter().map(|&i| points[i].clone()).collect();
    let normals = (0..ring.len())
        .map(|i| {
            let d = sub(&verts[(i + 1) % verts.len()], &verts[i]);
            vec![d[1].clone(), -&d[0]]
        })
        .collect();
    Hull { facets: Some(slabs(normals, &verts)), vertices: ring }
}

fn orient(p: &[GVec], f: &[usize; 3], q: &[GoldenScalar]) -> i32 {
    let n = cross3(&sub(&p[f[1]], &p[f[0]]), &sub(&p[f[2]], &p[f[0]]));
    dot3(&n, &sub(q, &p[f[0]])).signum()
}

/// Beneath-beyond with strict visibility; flat vertices are removed afterwards.
fn hull_3d(p: &[GVec]) -> Hull {
    let n = p.len();
    let i0 = 0;
    let i1 = (1..n).find(|&i| p[i] != p[i0]).expect("distinct points");
    let i2 = (0..n)
        .find(|&i| !cross3(&sub(&p[i1], &p[i0]), &sub(&p[i], &p[i0])).iter().all(Zero::is_zero))
        .expect("non-collinear points");
    let i3 = (0..n).find(|&i| orient(p, &[i0, i1, i2], &p[i]) != 0).expect("full-dimensional points");
    let mut faces: Vec<[usize; 3]> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let push = |faces: &mut Vec<[usize; 3]>, alive: &mut Vec<bool>, f: [usize; 3]| {
        faces.push(f);
        alive.push(true);
    };
    // Orient the initial tetrahedron outward.
    let flip = orient(p, &[i0, i1, i2], &p[i3]) > 0;
    let base = if flip { [i0, i2, i1] } else { [i0, i1, i2] };
    push(&mut faces, &mut alive, base);
    for e in 0..3 {
        let (a, b) = (base[e], base[(e + 1) % 3]);
        push(&mut faces, &mut alive, [b, a, i3]);
    }
    let initial = [i0, i1, i2, i3];
    for q in 0..n {
        if initial.contains(&q) {
            continue;
        }
        let visible: Vec<usize> = (0..faces.len()).filter(|&f| alive[f] && orient(p, &faces[f], &p[q]) > 0).collect();
        if visible.is_empty() {
            continue;
        }
        let mut edges = HashSet::new();
        for &f in &visible {
            let t = faces[f];
            for e in 0..3 {
                edges.insert((t[e], t[(e + 1) % 3]));
            }
        }
        let horizon: Vec<(usize, usize)> = visible
            .iter()
            .flat_map(|&f| {
                let t = faces[f];
                (0..3).map(move |e| (t[e], t[(e + 1) % 3]))
            })
            .filter(|&(a, b)| !edges.contains(&(b, a)))
            .collect();
        for &f in &visible {
            alive[f] = false;
        }
        for (a, b) in horizon {
            push(&mut faces, &mut alive, [a, b, q]);
        }
    }
    let live: Vec<[usize; 3]> = faces.iter().zip(&alive).filter(|(_, &a)| a).map(|(f, _)| *f).collect();
    let normal_of = |f: &[usize; 3]| {
        canonical_direction(&cross3(&sub(&p[f[1]], &p[f[0]]), &sub(&p[f[2]], &p[f[0]]))).expect("proper triangle")
    };
    let mut incident: HashMap<usize, HashSet<GVec>> = HashMap::new();
    for f in &live {
        let nrm = normal_of(f);
        for &v in f {
            incident.entry(v).or_default().insert(nrm.clone());
        }
    }
    let mut vertices: Vec<usize> = incident
        .into_iter()
        .filter(|(_, normals)| {
            let rows: Vec<GVec> = normals.iter().cloned().collect();
            rows.len() >= 3 && crate::linalg::rank(&crate::linalg::GoldenMatrix::from_rows(rows).expect("3 columns")) == 3
        })
        .map(|(v, _)| v)
        .collect();
    vertices.sort_unstable();
    let verts: Vec<GVec> = vertices.iter().map(|&i| p[i].clone()).collect();
    let normals = live.iter().map(normal_of).collect();
    Hull { facets: Some(slabs(normals, &verts)), vertices }
}

fn extreme_by_lp(points: &[GVec]) -> Vec<usize> {
    let mut keep: Vec<usize> = (0..points.len()).collect();
    let mut i = 0;
    while i < keep.len() {
        let others: Vec<GVec> = keep.iter().filter(|&&j| j != keep[i]).map(|&j| points[j].clone()).collect();
        if in_convex_hull(&points[keep[i]], &others) {
            keep.remove(i);
        } else {
            i += 1;
        }
    }
    keep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> GVec {
        xs.iter().map(|&x| GoldenScalar::from_int(x)).collect()
    }

    #[test]
    fn square_with_edge_and_center_points() {
        let pts = vec![v(&[0, 0]), v(&[1, 0]), v(&[2, 0]), v(&[2, 2]), v(&[0, 2]), v(&[1, 1])];
        let h = hull(&pts, 2);
        let mut vs = h.vertices.clone();
        vs.sort();
        assert_eq!(vs, vec![0, 2, 3, 4]);
        assert_eq!(h.facets.unwrap().len(), 2);
    }

    #[test]
    fn cube_with_face_points() {
        let mut pts = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    pts.push(v(&[x, y, z]));
                }
            }
        }
        let h = hull(&pts, 3);
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.facets.unwrap().len(), 3);
        assert_eq!(extreme_by_lp(&pts).len(), 8);
    }

    #[test]
    fn octahedron() {
        let pts = vec![v(&[1, 0, 0]), v(&[-1, 0, 0]), v(&[0, 1, 0]), v(&[0, -1, 0]), v(&[0, 0, 1]), v(&[0, 0, -1]), v(&[0, 0, 0])];
        let h = hull(&pts, 3);
        assert_eq!(h.vertices, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(h.facets.unwrap().len(), 4);
    }
}
