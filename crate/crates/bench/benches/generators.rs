use criterion::{criterion_group, criterion_main, Criterion};
use quasilattice::cluster::catalog;
use quasilattice::generator::{generate_baake_moody, generate_bfs, generate_box, generic_shift, Strip};
use quasilattice::scheme::build_projectors;
use quasilattice::Rational;

fn decagon() -> Strip {
    let c = catalog("decagon").unwrap();
    let gamma = generic_shift(c.k);
    Strip::new(c, gamma).unwrap()
}

fn projectors(c: &mut Criterion) {
    for name in ["decagon", "icosahedron", "dodecahedron"] {
        let cluster = catalog(name).unwrap();
        c.bench_function(&format!("projectors/{name}"), |b| b.iter(|| build_projectors(&cluster).unwrap()));
    }
}

fn decagon_generators(c: &mut Criterion) {
    let s = decagon();
    let r = Rational::from(8);
    let red = s.reduce().unwrap();
    let mut g = c.benchmark_group("decagon_r8");
    g.sample_size(10);
    g.bench_function("box", |b| b.iter(|| generate_box(&s, &r).unwrap()));
    g.bench_function("bfs", |b| b.iter(|| generate_bfs(&s, &r, None).unwrap()));
    g.bench_function("baake_moody", |b| b.iter(|| generate_baake_moody(&s, &red, &r).unwrap()));
    g.bench_function("reduce", |b| b.iter(|| s.reduce().unwrap()));
    g.finish();
}

fn icosahedron_bfs(c: &mut Criterion) {
    let cl = catalog("icosahedron").unwrap();
    let s = Strip::new(cl.clone(), generic_shift(cl.k)).unwrap();
    let r = Rational::from(5);
    let mut g = c.benchmark_group("icosahedron_r5");
    g.sample_size(10);
    g.bench_function("bfs", |b| b.iter(|| generate_bfs(&s, &r, None).unwrap()));
    g.finish();
}

criterion_group!(benches, projectors, decagon_generators, icosahedron_bfs);
criterion_main!(benches);
