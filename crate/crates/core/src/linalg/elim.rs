//! Elimination over Q(√5): rank, reduced row echelon form, kernels, affine solves.

use num_traits::{One, Zero};

use super::{GoldenMatrix, LinalgError};
use crate::goldfield::{GVec, GoldenScalar};

/// Rank by fraction-free (Bareiss) elimination.
pub fn rank(m: &GoldenMatrix) -> usize {
    let mut a = m.to_rows();
    bareiss_in_place(&mut a).0
}

/// Determinant of a square matrix, computed fraction-free.
pub fn determinant(m: &GoldenMatrix) -> Result<GoldenScalar, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(GoldenScalar::one());
    }
    let mut a = m.to_rows();
    let (r, sign) = bareiss_in_place(&mut a);
    if r < n {
        return Ok(GoldenScalar::zero());
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign < 0 { -d } else { d })
}

/// Returns `(rank, permutation sign)`; on full rank the last pivot is the determinant.
fn bareiss_in_place(a: &mut [Vec<GoldenScalar>]) -> (usize, i32) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = GoldenScalar::one();
    let mut r = 0;
    let mut sign = 1;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &(&a[i][j] * &a[r][c]) - &(&a[i][c] * &a[r][j]);
                a[i][j] = num.checked_div(&prev).expect("nonzero Bareiss pivot");
            }
            a[i][c] = GoldenScalar::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    (r, sign)
}

/// Reduced row echelon form and the pivot columns.
pub fn rref(m: &GoldenMatrix) -> (GoldenMatrix, Vec<usize>) {
    let mut a = m.to_rows();
    let pivots = rref_in_place(&mut a, m.cols());
    let out = if a.is_empty() {
        GoldenMatrix::zeros(0, m.cols())
    } else {
        GoldenMatrix::from_rows(a).expect("rectangular")
    };
    (out, pivots)
}

fn rref_in_place(a: &mut [Vec<GoldenScalar>], ncols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip().expect("nonzero pivot");
        for v in a[r].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right null space, one vector per free column.
pub fn kernel_basis(m: &GoldenMatrix) -> Vec<GVec> {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let mut basis = Vec::new();
    for f in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![GoldenScalar::zero(); n];
        v[f] = GoldenScalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, f);
        }
        basis.push(v);
    }
    basis
}

/// A particular solution of `Mx = c` together with a basis of the homogeneous solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: GVec,
    pub kernel: Vec<GVec>,
}

/// Solves `Mx = c`; `Ok(None)` when the system is inconsistent.
pub fn solve_affine(m: &GoldenMatrix, c: &[GoldenScalar]) -> Result<Option<AffineSolution>, LinalgError> {
    if c.len() != m.rows() {
        return Err(LinalgError::ShapeMismatch {
            op: "solve_affine",
            left: m.shape(),
            right: (c.len(), 1),
        });
    }
    let n = m.cols();
    let mut a: Vec<GVec> = (0..m.rows())
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(c[i].clone());
            row
        })
        .collect();
    let pivots = rref_in_place(&mut a, n + 1);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut particular = vec![GoldenScalar::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        particular[p] = a[row][n].clone();
    }
    Ok(Some(AffineSolution { particular, kernel: kernel_basis(m) }))
}

/// Inverse of a square matrix, or `Singular`.
pub fn inverse(m: &GoldenMatrix) -> Result<GoldenMatrix, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    let mut a: Vec<GVec> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { GoldenScalar::one() } else { GoldenScalar::zero() }));
            row
        })
        .collect();
    let pivots = rref_in_place(&mut a, n);
    if pivots.len() < n {
        return Err(LinalgError::Singular);
    }
    Ok(GoldenMatrix::from_fn(n, n, |i, j| a[i][n + j].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goldfield::Rational;
    use proptest::prelude::*;

    fn small_golden() -> impl Strategy<Value = GoldenScalar> {
        (-4i64..=4, -4i64..=4, 1i64..=3).prop_map(|(a, b, d)| {
            GoldenScalar::new(Rational::new(a, d), Rational::new(b, d))
        })
    }

    fn matrix(r: usize, c: usize) -> impl Strategy<Value = GoldenMatrix> {
        proptest::collection::vec(small_golden(), r * c)
            .prop_map(move |d| GoldenMatrix::new(r, c, d).unwrap())
    }

    #[test]
    fn basic_ranks() {
        assert_eq!(rank(&GoldenMatrix::zeros(3, 4)), 0);
        assert_eq!(rank(&GoldenMatrix::identity(4)), 4);
        assert!(kernel_basis(&GoldenMatrix::identity(3)).is_empty());
    }

    #[test]
    fn infeasible_system() {
        let m = GoldenMatrix::from_i64_rows(&[vec![1, 1], vec![2, 2]]).unwrap();
        let c = [GoldenScalar::from_int(1), GoldenScalar::from_int(3)];
        assert!(solve_affine(&m, &c).unwrap().is_none());
        let zero = [GoldenScalar::zero(), GoldenScalar::zero()];
        let s = solve_affine(&m, &zero).unwrap().unwrap();
        assert!(s.particular.iter().all(GoldenScalar::is_zero));
    }

    #[test]
    fn determinant_matches_expansion() {
        let m = GoldenMatrix::from_rows(vec![
            vec!["1".parse().unwrap(), "sqrt5".parse().unwrap()],
            vec!["sqrt5".parse().unwrap(), "1".parse().unwrap()],
        ])
        .unwrap();
        assert_eq!(determinant(&m).unwrap(), GoldenScalar::from_int(-4));
    }

    proptest! {
        #[test]
        fn rank_nullity(m in matrix(3, 5)) {
            let r = rank(&m);
            let (_, piv) = rref(&m);
            prop_assert_eq!(r, piv.len());
            let k = kernel_basis(&m);
            prop_assert_eq!(r + k.len(), 5);
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(GoldenScalar::is_zero));
            }
        }

        #[test]
        fn solve_substitutes_back(m in matrix(3, 4), x in proptest::collection::vec(small_golden(), 4)) {
            let c = m.mul_vec(&x).unwrap();
            let s = solve_affine(&m, &c).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&s.particular).unwrap(), c);
        }

        #[test]
        fn inverse_is_two_sided(m in matrix(3, 3)) {
            match inverse(&m) {
                Ok(inv) => {
                    prop_assert_eq!(&m * &inv, GoldenMatrix::identity(3));
                    prop_assert!(!determinant(&m).unwrap().is_zero());
                }
                Err(_) => prop_assert!(determinant(&m).unwrap().is_zero()),
            }
        }
    }
}
