//! SVG and XYZ output for patterns and planar atomic surfaces.

use std::fmt::Write;

use crate::generator::{neighbor_graph, Pattern};
use crate::geometry::AtomicSurface;
use crate::linalg::GoldenMatrix;
use crate::round_sig;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RenderError {
    #[error("{what} has dimension {found}, expected {expected}")]
    Dimension { what: &'static str, expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    /// Circle radius in physical units.
    pub point_radius: f64,
    pub edges: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { point_radius: 0.08, edges: true }
    }
}

fn num(x: f64) -> String {
    format!("{}", round_sig(x))
}

fn svg_open(out: &mut String, bounds: Option<(f64, f64, f64, f64)>) {
    let (x0, y0, x1, y1) = bounds.unwrap_or((-1.0, -1.0, 1.0, 1.0));
    let (w, h) = (x1 - x0, y1 - y0);
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"{}\" height=\"{}\">",
        num(x0),
        num(y0),
        num(w),
        num(h),
        num((w * 40.0).max(1.0)),
        num((h * 40.0).max(1.0))
    );
}

fn extent(points: impl Iterator<Item = (f64, f64)>, pad: f64) -> Option<(f64, f64, f64, f64)> {
    let mut b: Option<(f64, f64, f64, f64)> = None;
    for (x, y) in points {
        b = Some(match b {
            None => (x, y, x, y),
            Some((a, c, d, e)) => (a.min(x), c.min(y), d.max(x), e.max(y)),
        });
    }
    b.map(|(a, c, d, e)| (a - pad, c - pad, d + pad, e + pad))
}

/// Points as circles (boundary points hollow) and neighbor edges as segments,
/// in physical units with the y axis pointing up.
pub fn render_svg(p: &Pattern, opts: &RenderOptions) -> Result<String, RenderError> {
    let dim = p.phys_dim();
    if !p.is_empty() && dim != 2 {
        return Err(RenderError::Dimension { what: "pattern", expected: 2, found: dim });
    }
    let xy = |i: usize| (p.points[i].phys[0], -p.points[i].phys[1]);
    let mut out = String::new();
    svg_open(&mut out, extent((0..p.len()).map(xy), 4.0 * opts.point_radius));
    if opts.edges {
        let g = neighbor_graph(p);
        if !g.edges.is_empty() {
            out.push_str("<g stroke=\"#444444\" stroke-width=\"0.03\">\n");
            for &(i, j, _) in &g.edges {
                let ((x1, y1), (x2, y2)) = (xy(i), xy(j));
                let _ = writeln!(out, "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>", num(x1), num(y1), num(x2), num(y2));
            }
            out.push_str("</g>\n");
        }
    }
    if !p.is_empty() {
        out.push_str("<g fill=\"#1f4e79\" stroke=\"#1f4e79\" stroke-width=\"0.02\">\n");
        for (i, q) in p.points.iter().enumerate() {
            let (x, y) = xy(i);
            let fill = if q.boundary { " fill=\"none\"" } else { "" };
            let _ = writeln!(out, "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"{fill}/>", num(x), num(y), num(opts.point_radius));
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Orthonormal float basis of the column space of `m`, by Gram-Schmidt over
/// the columns in order.
pub fn plane_basis(m: &GoldenMatrix) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for j in 0..m.cols() {
        let mut v: Vec<f64> = m.col(j).iter().map(|x| x.to_f64()).collect();
        for b in &basis {
            let d: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
            for (x, y) in v.iter_mut().zip(b) {
                *x -= d * y;
            }
        }
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-9 {
            basis.push(v.into_iter().map(|x| x / n).collect());
        }
    }
    basis
}

/// Coordinates of the surface vertices in `basis`, scaled by `scale`, in
/// counter-clockwise order.
pub fn surface_polygon(s: &AtomicSurface, basis: &[Vec<f64>], scale: f64) -> Vec<(f64, f64)> {
    let mut pts: Vec<(f64, f64)> = s
        .vertices
        .iter()
        .map(|v| {
            let c = |b: &Vec<f64>| scale * v.iter().zip(b).map(|(x, y)| x.to_f64() * y).sum::<f64>();
            (c(&basis[0]), c(&basis[1]))
        })
        .collect();
    let n = pts.len() as f64;
    let (cx, cy) = pts.iter().fold((0.0, 0.0), |a, p| (a.0 + p.0 / n, a.1 + p.1 / n));
    pts.sort_by(|a, b| (a.1 - cy).atan2(a.0 - cx).total_cmp(&(b.1 - cy).atan2(b.0 - cx)));
    pts
}

/// Planar atomic surfaces as closed polygons, with points and segments for
/// the degenerate ones. Drawn in the plane spanned by `m` (typically `π′`)
/// and scaled by `scale` (typically κ).
pub fn render_surfaces_svg(surfaces: &[&AtomicSurface], m: &GoldenMatrix, scale: f64) -> Result<String, RenderError> {
    let basis = plane_basis(m);
    if basis.len() != 2 {
        return Err(RenderError::Dimension { what: "surface plane", expected: 2, found: basis.len() });
    }
    let polys: Vec<Vec<(f64, f64)>> = surfaces
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| surface_polygon(s, &basis, scale).into_iter().map(|(x, y)| (x, -y)).collect())
        .collect();
    let mut out = String::new();
    svg_open(&mut out, extent(polys.iter().flatten().copied(), 0.1));
    for poly in &polys {
        match poly.as_slice() {
            [(x, y)] => {
                let _ = writeln!(out, "<circle cx=\"{}\" cy=\"{}\" r=\"0.02\" fill=\"#08519c\"/>", num(*x), num(*y));
            }
            [(x1, y1), (x2, y2)] => {
                let _ = writeln!(
                    out,
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#08519c\" stroke-width=\"0.01\"/>",
                    num(*x1),
                    num(*y1),
                    num(*x2),
                    num(*y2)
                );
            }
            _ => {
                let pts: Vec<String> = poly.iter().map(|(x, y)| format!("{},{}", num(*x), num(*y))).collect();
                let _ = writeln!(
                    out,
                    "<polygon points=\"{}\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#08519c\" stroke-width=\"0.01\"/>",
                    pts.join(" ")
                );
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// XYZ text: point count, a comment line, then `Q x y z` per point.
pub fn render_xyz(p: &Pattern) -> Result<String, RenderError> {
    let dim = p.phys_dim();
    if !p.is_empty() && dim != 3 {
        return Err(RenderError::Dimension { what: "pattern", expected: 3, found: dim });
    }
    let mut out = format!("{}\n{} radius={}\n", p.len(), p.cluster, p.radius);
    for q in &p.points {
        let _ = writeln!(out, "Q {} {} {}", num(q.phys[0]), num(q.phys[1]), num(q.phys[2]));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::catalog;
    use crate::generator::{generate_box, generic_shift, Strip};
    use crate::goldfield::{GoldenScalar, Rational};

    fn decagon(generic: bool) -> Strip {
        let c = catalog("decagon").unwrap();
        let gamma = if generic { generic_shift(5) } else { vec![GoldenScalar::from_int(0); 5] };
        Strip::new(c, gamma).unwrap()
    }

    fn parse_attr(tag: &str, name: &str) -> f64 {
        let key = format!(" {name}=\"");
        let start = tag.find(&key).unwrap() + key.len();
        tag[start..].split('"').next().unwrap().parse().unwrap()
    }

    #[test]
    fn pentagon_surface_lands_on_its_vertices() {
        let s = decagon(false);
        let red = s.reduce().unwrap();
        let pp = &red.projectors.pi_prime;
        let basis = plane_basis(pp);
        assert_eq!(basis.len(), 2);
        let kappa = red.projectors.kappa_f64();
        let poly = surface_polygon(&red.cosets[1].surface, &basis, kappa);

        // The pentagon (2, −τ, −τ′, −τ′, −τ)/√10 and its cyclic shifts.
        let t = (1.0 + 5f64.sqrt()) / 2.0;
        let tc = 1.0 - t;
        let base = [2.0, -t, -tc, -tc, -t];
        let mut expected: Vec<(f64, f64)> = (0..5)
            .map(|sh| {
                let v: Vec<f64> = (0..5).map(|i| base[(i + 5 - sh) % 5] / 10f64.sqrt()).collect();
                let c = |b: &Vec<f64>| v.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
                (c(&basis[0]), c(&basis[1]))
            })
            .collect();
        assert_eq!(poly.len(), 5);
        for p in &poly {
            let i = expected.iter().position(|e| (e.0 - p.0).abs() < 1e-9 && (e.1 - p.1).abs() < 1e-9);
            expected.remove(i.unwrap_or_else(|| panic!("{p:?} is not a pentagon vertex")));
        }

        let surfaces: Vec<_> = red.cosets.iter().map(|c| &c.surface).collect();
        let svg = render_surfaces_svg(&surfaces, pp, kappa).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 4);
        let first = svg.lines().find(|l| l.starts_with("<polygon")).unwrap();
        let pts = first.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
        assert_eq!(pts.split(' ').count(), 5);
    }

    #[test]
    fn empty_pattern_gives_bare_documents() {
        let s = decagon(true);
        let p = Pattern::from_hits(&s, &Rational::from(1), Vec::new());
        let svg = render_svg(&p, &RenderOptions::default()).unwrap();
        assert!(!svg.contains("<circle") && !svg.contains("<line") && !svg.contains("<g"));
        assert!(svg.trim_end().ends_with("</svg>"));
        let xyz = render_xyz(&p).unwrap();
        assert_eq!(xyz.lines().count(), 2);
        assert_eq!(xyz.lines().next(), Some("0"));
    }

    #[test]
    fn decagon_edges_have_unit_length() {
        let s = decagon(true);
        let p = generate_box(&s, &Rational::from(8)).unwrap();
        let svg = render_svg(&p, &RenderOptions::default()).unwrap();
        let lines: Vec<&str> = svg.lines().filter(|l| l.starts_with("<line")).collect();
        assert!(lines.len() > p.len());
        for l in lines {
            let (dx, dy) = (parse_attr(l, "x2") - parse_attr(l, "x1"), parse_attr(l, "y2") - parse_attr(l, "y1"));
            assert!(((dx * dx + dy * dy).sqrt() - 1.0).abs() < 1e-6, "{l}");
        }
        assert_eq!(svg.matches("<circle").count(), p.len());
        assert!(render_xyz(&p).is_err());
    }

    #[test]
    fn dodecahedron_xyz_neighbors_sit_at_cluster_distances() {
        let c = catalog("dodecahedron").unwrap();
        let emb = c.embedding.clone().unwrap();
        let s = Strip::new(c, generic_shift(10)).unwrap();
        let p = crate::generator::generate_bfs(&s, &Rational::from(2), None).unwrap();
        let xyz = render_xyz(&p).unwrap();
        let rows: Vec<[f64; 3]> = xyz
            .lines()
            .skip(2)
            .map(|l| {
                let f: Vec<f64> = l.split(' ').skip(1).map(|x| x.parse().unwrap()).collect();
                [f[0], f[1], f[2]]
            })
            .collect();
        assert_eq!(rows.len(), p.len());
        let norms: Vec<f64> = emb.iter().map(|e| e.iter().map(|x| x * x).sum::<f64>().sqrt()).collect();
        let g = neighbor_graph(&p);
        assert!(!g.edges.is_empty());
        for &(i, j, _) in &g.edges {
            let d = (0..3).map(|a| (rows[i][a] - rows[j][a]).powi(2)).sum::<f64>().sqrt();
            assert!(norms.iter().any(|n| (n - d).abs() < 1e-6), "{d}");
        }
        assert!(render_svg(&p, &RenderOptions::default()).is_err());
    }
}
