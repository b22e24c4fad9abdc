use std::io::Write;
use std::path::Path;

use anyhow::Context;
use quasilattice::cluster::CATALOG_NAMES;
use quasilattice::generator::{
    boundary_artifacts_only, equivalence_check, generate_baake_moody, generate_bfs, generate_box, neighbor_graph,
    neighbor_vector_error, occupancy_stats, EquivalenceReport, OccupancyStats, Pattern, Strip,
};
use quasilattice::linalg::lattice_index;
use quasilattice::render::{render_surfaces_svg, render_svg, render_xyz};
use quasilattice::scheme::{check_embedding, check_invariance, ReducedScheme, EMBEDDING_TOLERANCE};
use quasilattice::{GVec, Rational};
use serde::Serialize;

use crate::config::{lookup_cluster, strip_for, Mode, RunConfig};
use crate::Failed;

fn emit(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                out.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes") + "\n"
}

pub fn catalog_list() -> anyhow::Result<()> {
    emit(None, &CATALOG_NAMES.join("\n"))
}

pub fn catalog_show(name: &str) -> anyhow::Result<()> {
    let c = lookup_cluster(name)?;
    emit(None, &to_json(&c.to_json_value()))
}

fn generate(strip: &Strip, radius: &Rational, mode: Mode) -> anyhow::Result<Pattern> {
    Ok(match mode {
        Mode::Box => generate_box(strip, radius)?,
        Mode::Bfs => generate_bfs(strip, radius, None)?,
        Mode::Bm => generate_baake_moody(strip, &strip.reduce()?, radius)?,
        Mode::All => {
            let b = generate_box(strip, radius)?;
            let f = generate_bfs(strip, radius, None)?;
            let m = generate_baake_moody(strip, &strip.reduce()?, radius)?;
            if !equivalence_check(&b, &f).sets_equal() || !equivalence_check(&b, &m).sets_equal() {
                return Err(Failed("generators disagree; run `verify` for the difference report".into()).into());
            }
            b
        }
    })
}

pub fn project(cfg: &RunConfig) -> anyhow::Result<()> {
    let strip = cfg.strip()?;
    let p = generate(&strip, &cfg.radius, cfg.mode)?;
    emit(cfg.out.as_deref(), &p.to_json_string())?;
    if let Some(path) = &cfg.svg {
        emit(Some(path), &render_svg(&p, &cfg.render)?)?;
    }
    if let Some(path) = &cfg.xyz {
        emit(Some(path), &render_xyz(&p)?)?;
    }
    eprintln!("{}: {} points ({} on the window boundary)", p.cluster, p.len(), p.boundary_points().count());
    Ok(())
}

#[derive(Serialize)]
struct ReductionReport<'a> {
    cluster: &'a str,
    dims: (usize, usize, usize),
    index: String,
    nonempty_cosets: usize,
    cosets_with_interior: usize,
    scheme: &'a ReducedScheme,
}

pub fn reduce(cfg: &RunConfig) -> anyhow::Result<()> {
    let strip = cfg.strip()?;
    let red = strip.reduce()?;
    let index = lattice_index(&red.l, &red.cal_l).map(|i| i.to_string()).unwrap_or_else(|e| format!("undefined: {e}"));
    let report = ReductionReport {
        cluster: &strip.cluster.name,
        dims: red.projectors.dims,
        index,
        nonempty_cosets: red.cosets.len(),
        cosets_with_interior: red.m,
        scheme: &red,
    };
    emit(cfg.out.as_deref(), &to_json(&report))?;
    if let Some(path) = &cfg.svg {
        let surfaces: Vec<_> = red.cosets.iter().map(|c| &c.surface).collect();
        emit(Some(path), &render_surfaces_svg(&surfaces, &red.projectors.pi_prime, red.projectors.kappa_f64())?)?;
    }
    eprintln!("{}: {} cosets, {} with interior", strip.cluster.name, red.cosets.len(), red.m);
    Ok(())
}

#[derive(Serialize)]
struct Check {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct VerifyReport {
    cluster: String,
    shift: GVec,
    radius: String,
    points: [usize; 3],
    box_vs_bfs: EquivalenceReport,
    box_vs_baake_moody: EquivalenceReport,
    checks: Vec<Check>,
    passed: bool,
}

fn soundness(strip: &Strip, p: &Pattern) -> (bool, String) {
    let bad: Vec<&Vec<i64>> = p
        .points
        .iter()
        .filter(|q| {
            let m = strip.accepts_exact(&q.lattice);
            !m.accepted() || q.boundary != (m == quasilattice::Membership::Boundary)
        })
        .map(|q| &q.lattice)
        .collect();
    (bad.is_empty(), format!("{} of {} points fail the exact window test", bad.len(), p.len()))
}

fn equality_check(name: &str, rep: &EquivalenceReport, a: &Pattern, b: &Pattern) -> Check {
    let detail = if rep.sets_equal() {
        "equal".to_string()
    } else if boundary_artifacts_only(rep, a, b) {
        format!("{} differing points, all on the window boundary", rep.difference_count())
    } else {
        format!("{} differing points", rep.difference_count())
    };
    Check { name: name.into(), passed: rep.sets_equal(), detail }
}

pub fn verify(cfg: &RunConfig) -> anyhow::Result<()> {
    let strip = cfg.strip()?;
    let r = &cfg.radius;
    let mut checks = Vec::new();
    let inv = check_invariance(&strip.cluster, &strip.projectors);
    checks.push(Check {
        name: "projectors commute with generators".into(),
        passed: inv.is_ok(),
        detail: format!("{:?}", inv.failures),
    });
    if strip.cluster.embedding.is_some() {
        let e = check_embedding(&strip.cluster, &strip.projectors)?;
        checks.push(Check {
            name: "embedding reconstruction".into(),
            passed: e.is_ok(),
            detail: format!("max error {:e} (tolerance {EMBEDDING_TOLERANCE:e})", e.max_error),
        });
    }
    let b = generate_box(&strip, r)?;
    let f = generate_bfs(&strip, r, None)?;
    let m = generate_baake_moody(&strip, &strip.reduce()?, r)?;
    for (name, p) in [("box", &b), ("bfs", &f), ("baake-moody", &m)] {
        let (passed, detail) = soundness(&strip, p);
        checks.push(Check { name: format!("{name} soundness"), passed, detail });
    }
    if let Some(emb) = &strip.cluster.embedding {
        let g = neighbor_graph(&b);
        let err = neighbor_vector_error(&b, &g, emb).unwrap_or(0.0);
        checks.push(Check {
            name: "neighbor differences are cluster vectors".into(),
            passed: err <= 1e-9,
            detail: format!("{} edges, max error {err:e}", g.edges.len()),
        });
    }
    let box_vs_bfs = equivalence_check(&b, &f);
    let box_vs_baake_moody = equivalence_check(&b, &m);
    checks.push(equality_check("box = bfs", &box_vs_bfs, &b, &f));
    checks.push(equality_check("box = baake-moody", &box_vs_baake_moody, &b, &m));
    let passed = checks.iter().all(|c| c.passed);
    let report = VerifyReport {
        cluster: strip.cluster.name.clone(),
        shift: strip.gamma.clone(),
        radius: r.to_string(),
        points: [b.len(), f.len(), m.len()],
        box_vs_bfs,
        box_vs_baake_moody,
        checks,
        passed,
    };
    if let Some(path) = &cfg.out {
        emit(Some(path), &to_json(&report))?;
    }
    for c in &report.checks {
        println!("{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
    }
    if passed {
        println!("box = bfs = baake-moody ({} points)", b.len());
        Ok(())
    } else {
        Err(Failed(format!("verification failed for {}", report.cluster)).into())
    }
}

#[derive(Serialize)]
struct StatsEntry {
    cluster: String,
    generated_radius: String,
    points: usize,
    stats: OccupancyStats,
}

#[derive(Serialize)]
struct StatsReport {
    radius: String,
    shift: String,
    results: Vec<StatsEntry>,
}

fn stats_for(strip: &Strip, radius: &Rational, mode: Mode) -> anyhow::Result<StatsEntry> {
    let outer = radius + &Rational::from(strip.max_vector_ratio());
    let p = generate(strip, &outer, mode)?;
    let g = neighbor_graph(&p);
    let stats = occupancy_stats(strip, &p, &g, radius)?;
    Ok(StatsEntry { cluster: strip.cluster.name.clone(), generated_radius: outer.to_string(), points: p.len(), stats })
}

pub fn stats(cfg: &RunConfig, compare: &[String]) -> anyhow::Result<()> {
    let strip = cfg.strip()?;
    let mut results = vec![stats_for(&strip, &cfg.radius, cfg.mode)?];
    let mut others: Vec<String> = compare.to_vec();
    if others.is_empty() && strip.cluster.name == "icosahedron" {
        others.push("two_shell(1,1)".into());
    }
    for name in &others {
        let c = lookup_cluster(name)?;
        let shift = if cfg.shift.contains(',') { "generic" } else { cfg.shift.as_str() };
        results.push(stats_for(&strip_for(&c, shift)?, &cfg.radius, cfg.mode)?);
    }
    for e in &results {
        eprintln!(
            "{}: {} of {} points fully occupied ({:.4})",
            e.cluster,
            e.stats.fully_occupied,
            e.stats.counted,
            e.stats.fraction_f64()
        );
    }
    let report = StatsReport { radius: cfg.radius.to_string(), shift: cfg.shift.clone(), results };
    emit(cfg.out.as_deref(), &to_json(&report))
}
