mod common;

use common::*;
use num_bigint::BigInt;
use quasilattice::cluster::{catalog, ClusterSpec, SignedPermutation, CATALOG_NAMES};
use quasilattice::geometry::{slice_and_project, Membership};
use quasilattice::goldfield::GoldenScalar;
use quasilattice::linalg::{integer_kernel, kernel_basis, lattice_index, rank, IntegerLatticeBasis};
use quasilattice::scheme::{build_projectors, check_embedding, check_invariance, reduce};

#[test]
fn decagon_projectors() {
    let p = build_projectors(&catalog("decagon").unwrap()).unwrap();
    let five = frac(1, 5);
    assert_eq!(p.pi, m5(&frac(2, 5), &(-&tau_c() * &five), &(-&tau() * &five)));
    assert_eq!(p.pi_perp, m5(&frac(3, 5), &(&tau_c() * &five), &(&tau() * &five)));
    assert_eq!(p.pi_prime, m5(&frac(2, 5), &(-&tau() * &five), &(-&tau_c() * &five)));
    assert_eq!(p.pi_dprime, m5(&five, &five, &five));
    assert_eq!(p.dims, (2, 2, 1));
    assert_eq!(p.rho_sq, frac(2, 5));
}

#[test]
fn icosahedron_projectors() {
    let c = catalog("icosahedron").unwrap();
    let p = build_projectors(&c).unwrap();
    let printed = m6(&frac(1, 2), &g("1/10*sqrt5"));
    // The six-fold sign pattern describes the same projector with e3, e4
    // swapped and negated; with the listed coordinates π differs from it in
    // exactly eight entries, each by a sign.
    let q = SignedPermutation::from_pairs(&[(0, 1), (1, 1), (3, -1), (2, -1), (4, 1), (5, 1)]).unwrap();
    let qm = q.matrix();
    assert_eq!(&(&qm * &p.pi) * &qm.transpose(), printed);
    let differing = (0..6).flat_map(|i| (0..6).map(move |j| (i, j))).filter(|&(i, j)| p.pi.get(i, j) != printed.get(i, j)).count();
    assert_eq!(differing, 8);
    let a = c.generators[0].matrix();
    assert_ne!(&a * &printed, &printed * &a);
    assert_eq!(&a * &p.pi, &p.pi * &a);
    // Diagonal, magnitudes and the conjugate relation agree.
    for i in 0..6 {
        for j in 0..6 {
            assert_eq!(p.pi.get(i, j).abs(), printed.get(i, j).abs());
        }
    }
    assert_eq!(p.pi_perp, p.pi.conjugate());
    assert_eq!(p.pi_prime, p.pi_perp);
    assert!(p.pi_dprime.is_zero());
    let expected_rho = GoldenScalar::from_int(1).checked_div(&(&GoldenScalar::from_int(4) + &(&tau() * &GoldenScalar::from_int(2)))).unwrap();
    assert_eq!(p.rho_sq, expected_rho);
}

#[test]
fn dodecahedron_projectors() {
    let p = build_projectors(&catalog("dodecahedron").unwrap()).unwrap();
    assert_eq!(p.pi, m10(&frac(3, 10), &g("1/10*sqrt5"), &frac(1, 10)));
    assert_eq!(p.pi_perp, m10(&frac(7, 10), &g("-1/10*sqrt5"), &frac(-1, 10)));
    assert_eq!(p.pi_prime, m10(&frac(3, 10), &g("-1/10*sqrt5"), &frac(1, 10)));
    assert_eq!(p.pi_dprime, m10(&frac(2, 5), &GoldenScalar::from_int(0), &frac(-1, 5)));
    assert_eq!(rank(&p.pi_dprime), 4);
    assert_eq!(integer_kernel(&p.pi_dprime).unwrap().rank(), 6);
    assert_eq!(p.rho_sq, frac(1, 10));
}

#[test]
fn projector_algebra_for_every_catalog_entry() {
    for name in CATALOG_NAMES {
        let c = catalog(name).unwrap();
        let p = build_projectors(&c).unwrap();
        let (n, s, d) = p.dims;
        assert_eq!(n + s + d, c.k, "{name}");
        for m in [&p.pi, &p.pi_prime, &p.pi_dprime] {
            assert_eq!(&(m * m), m, "{name}");
            assert!(m.is_symmetric());
        }
        assert!((&p.pi * &p.pi_prime).is_zero());
        assert!((&p.pi * &p.pi_dprime).is_zero());
        assert!((&p.pi_prime * &p.pi_dprime).is_zero());
        assert_eq!(p.pi.conjugate(), p.pi_prime);
        assert!(p.pi_dprime.is_rational());
        assert!(check_invariance(&c, &p).is_ok(), "{name}");
        assert!(check_embedding(&c, &p).unwrap().is_ok(), "{name}");
        assert_eq!(kernel_basis(&p.pi_perp).len(), n);
    }
}

#[test]
fn embedding_reconstructs_cluster_vectors() {
    let d = catalog("decagon").unwrap();
    let r = check_embedding(&d, &build_projectors(&d).unwrap()).unwrap();
    assert!((r.reconstructed[0][0] - 1.0).abs() < 1e-9 && r.reconstructed[0][1].abs() < 1e-9);
    let i = catalog("icosahedron").unwrap();
    let r = check_embedding(&i, &build_projectors(&i).unwrap()).unwrap();
    let t = tau().to_f64();
    assert!((r.reconstructed[0][1] - t).abs() < 1e-9);
    let dd = catalog("dodecahedron").unwrap();
    let r = check_embedding(&dd, &build_projectors(&dd).unwrap()).unwrap();
    for (x, e) in r.reconstructed[9].iter().zip([-1.0, -1.0, 1.0]) {
        assert!((x - e).abs() < 1e-9);
    }
}

#[test]
fn trivial_cluster_has_no_internal_space() {
    let p = build_projectors(&ClusterSpec::trivial()).unwrap();
    assert_eq!(p.dims, (1, 0, 0));
    assert!(check_invariance(&ClusterSpec::trivial(), &p).is_ok());
}

fn decagon_w_lattice() -> IntegerLatticeBasis {
    // (1/5)·(4,−1,−1,−1,−1) and its cyclic shifts, at unit scale.
    let rows: Vec<Vec<BigInt>> = (0..4)
        .map(|i| (0..5).map(|j| BigInt::from(if i == j { 4 } else { -1 })).collect())
        .collect();
    IntegerLatticeBasis::from_generators(5, BigInt::from(5), &rows)
}

#[test]
fn decagon_reduction() {
    let p = build_projectors(&catalog("decagon").unwrap()).unwrap();
    let zero = vec![GoldenScalar::from_int(0); 5];
    let r = reduce(&p, &zero).unwrap();
    let w = decagon_w_lattice();
    assert!(r.cal_l.contains_lattice(&w) && w.contains_lattice(&r.cal_l));
    let sumzero = IntegerLatticeBasis::from_i64(5, &[vec![1, -1, 0, 0, 0], vec![0, 1, -1, 0, 0], vec![0, 0, 1, -1, 0], vec![0, 0, 0, 1, -1]]);
    assert_eq!(r.l, sumzero);
    assert_eq!(lattice_index(&r.l, &r.cal_l).unwrap(), BigInt::from(5));
    assert_eq!(r.cosets.len(), 6);
    assert_eq!(r.m, 4);
    for (j, c) in r.cosets.iter().enumerate() {
        let e = vec![GoldenScalar::from_int(j as i64), 0.into(), 0.into(), 0.into(), 0.into()];
        assert_eq!(c.offset, p.pi_dprime.mul_vec(&e).unwrap());
        assert_eq!(p.pi_dprime.mul_int_vec(&c.z), c.offset);
    }
    let k1 = &r.cosets[1].surface;
    let mut pentagon: Vec<Vec<GoldenScalar>> = (0..5)
        .map(|s| {
            let base = [frac(2, 5), -&tau() * &frac(1, 5), -&tau_c() * &frac(1, 5), -&tau_c() * &frac(1, 5), -&tau() * &frac(1, 5)];
            (0..5).map(|i| base[(i + 5 - s) % 5].clone()).collect()
        })
        .collect();
    pentagon.sort();
    assert_eq!(k1.vertices, pentagon);
    let t = tau();
    assert_eq!(r.cosets[2].surface.vertices, k1.scaled(&-&t).vertices);
    assert_eq!(r.cosets[3].surface.vertices, k1.scaled(&t).vertices);
    assert_eq!(r.cosets[4].surface.vertices, k1.negated().vertices);
    assert_eq!(r.cosets[0].surface.vertices.len(), 1);
    assert!(!r.cosets[0].has_interior && !r.cosets[5].has_interior);

    let bary: Vec<GoldenScalar> = (0..5).map(|i| pentagon.iter().map(|v| v[i].clone()).sum::<GoldenScalar>() * frac(1, 5)).collect();
    assert_eq!(k1.contains(&bary).unwrap(), Membership::Inside);
    assert_eq!(k1.contains(&pentagon[0]).unwrap(), Membership::Boundary);
    let far: Vec<GoldenScalar> = pentagon[0].iter().map(|x| -&t * x).collect();
    assert_eq!(k1.contains(&far).unwrap(), Membership::Outside);
}

#[test]
fn icosahedron_degenerates_to_a_model_set() {
    let p = build_projectors(&catalog("icosahedron").unwrap()).unwrap();
    let r = reduce(&p, &vec![GoldenScalar::from_int(0); 6]).unwrap();
    assert_eq!(p.dims.2, 0);
    assert_eq!(r.cosets.len(), 1);
    assert_eq!(r.cal_l, IntegerLatticeBasis::standard(6));
    assert_eq!(r.l, IntegerLatticeBasis::standard(6));
    assert!(r.cosets[0].has_interior);
}

#[test]
fn dodecahedron_slice_is_three_dimensional() {
    let p = build_projectors(&catalog("dodecahedron").unwrap()).unwrap();
    let mut e1 = vec![GoldenScalar::from_int(0); 10];
    e1[0] = GoldenScalar::from_int(1);
    let c = p.pi_dprime.mul_vec(&e1).unwrap();
    let s = slice_and_project(&p.pi_dprime, &p.pi_prime, &c, &vec![GoldenScalar::from_int(0); 10]);
    assert_eq!(s.dim, Some(3));
    let r = reduce(&p, &vec![GoldenScalar::from_int(0); 10]).unwrap();
    assert!(r.m > 0 && r.m <= r.cosets.len());
    assert!(lattice_index(&r.l, &r.cal_l).unwrap() > BigInt::from(0));
}
