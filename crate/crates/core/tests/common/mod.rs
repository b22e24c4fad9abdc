#![allow(dead_code)]

use quasilattice::goldfield::{GVec, GoldenScalar};
use quasilattice::linalg::GoldenMatrix;

pub fn g(s: &str) -> GoldenScalar {
    s.parse().unwrap()
}

pub fn tau() -> GoldenScalar {
    GoldenScalar::tau()
}

pub fn tau_c() -> GoldenScalar {
    GoldenScalar::tau_conj()
}

/// Five-fold circulant pattern `(α, β, γ)` used for the decagonal projectors.
pub fn m5(a: &GoldenScalar, b: &GoldenScalar, c: &GoldenScalar) -> GoldenMatrix {
    GoldenMatrix::from_fn(5, 5, |i, j| match (i + 5 - j) % 5 {
        0 => a.clone(),
        1 | 4 => b.clone(),
        _ => c.clone(),
    })
}

/// Six-dimensional pattern `(α, β)` of the icosahedral projectors.
pub fn m6(a: &GoldenScalar, b: &GoldenScalar) -> GoldenMatrix {
    let signs: [[i8; 6]; 6] = [
        [0, 1, 1, 1, 1, 1],
        [1, 0, 1, -1, -1, 1],
        [1, 1, 0, 1, -1, -1],
        [1, -1, 1, 0, 1, -1],
        [1, -1, -1, 1, 0, 1],
        [1, 1, -1, -1, 1, 0],
    ];
    GoldenMatrix::from_fn(6, 6, |i, j| match signs[i][j] {
        0 => a.clone(),
        1 => b.clone(),
        _ => -b,
    })
}

/// Ten-dimensional pattern `(α, β, γ)` of the dodecahedral projectors.
pub fn m10(a: &GoldenScalar, b: &GoldenScalar, c: &GoldenScalar) -> GoldenMatrix {
    // 'a' = α, 'b' = ±β, 'c' = ±γ; uppercase = negated.
    let pat = [
        "abccbcbcCC",
        "babccCcbcC",
        "cbabcCCcbc",
        "ccbabcCCcb",
        "bccbabcCCc",
        "cCCcbacBBc",
        "bcCCccacBB",
        "cbcCCBcacB",
        "CcbcCBBcac",
        "CCcbccBBca",
    ];
    GoldenMatrix::from_fn(10, 10, |i, j| match pat[i].as_bytes()[j] {
        b'a' => a.clone(),
        b'b' => b.clone(),
        b'B' => -b,
        b'c' => c.clone(),
        b'C' => -c,
        other => panic!("bad pattern byte {other}"),
    })
}

pub fn frac(p: i64, q: i64) -> GoldenScalar {
    GoldenScalar::frac(p, q, 0, 1)
}

pub fn gv(xs: &[GoldenScalar]) -> GVec {
    xs.to_vec()
}

/// Reciprocals of odd primes other than 5, one per coordinate.
pub fn generic_shift(k: usize) -> GVec {
    const PRIMES: [i64; 16] = [3, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61];
    PRIMES[..k].iter().map(|&p| frac(1, p)).collect()
}
