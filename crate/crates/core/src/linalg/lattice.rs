//! Integer lattices in Hermite normal form.
//!
//! Basis vectors are stored as the rows of a row-style HNF: echelon form,
//! positive pivots, entries above each pivot reduced into `[0, pivot)`.
//! A lattice with denominator `D` stands for `(1/D)·span(rows)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{GoldenMatrix, LinalgError};

pub type IVec = Vec<BigInt>;

/// Result of a row HNF with transform: `u · input = [h; 0]`, `u` unimodular.
#[derive(Debug, Clone)]
pub struct Hnf {
    pub h: Vec<IVec>,
    pub pivots: Vec<usize>,
    pub u: Vec<IVec>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.h.len()
    }

    /// Rows of `u` that send the input to zero: a basis of its integer left kernel.
    pub fn left_kernel(&self) -> &[IVec] {
        &self.u[self.h.len()..]
    }
}

fn axpy(dst: &mut [BigInt], f: &BigInt, src: &[BigInt]) {
    if f.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += f * s;
        }
    }
}

/// Row HNF of the integer matrix whose rows are `rows` (each of length `n`).
pub fn hnf(rows: &[IVec], n: usize) -> Hnf {
    let m = rows.len();
    let mut a: Vec<IVec> = rows.to_vec();
    let mut u: Vec<IVec> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if a[i][c].is_zero() {
                continue;
            }
            if a[r][c].is_zero() {
                a.swap(r, i);
                u.swap(r, i);
                continue;
            }
            let e = a[r][c].extended_gcd(&a[i][c]);
            let (g, x, y) = (e.gcd, e.x, e.y);
            let p = &a[i][c] / &g;
            let q = &a[r][c] / &g;
            // [x y; -p q] has determinant x·q + y·p = 1.
            let combine = |vr: &IVec, vi: &IVec| -> (IVec, IVec) {
                let nr = vr.iter().zip(vi).map(|(s, t)| &x * s + &y * t).collect();
                let ni = vr.iter().zip(vi).map(|(s, t)| &q * t - &p * s).collect();
                (nr, ni)
            };
            let (nr, ni) = combine(&a[r], &a[i]);
            a[r] = nr;
            a[i] = ni;
            let (nr, ni) = combine(&u[r], &u[i]);
            u[r] = nr;
            u[i] = ni;
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            for v in a[r].iter_mut().chain(u[r].iter_mut()) {
                *v = -&*v;
            }
        }
        for i in 0..r {
            let f = a[i][c].div_floor(&a[r][c]);
            if !f.is_zero() {
                let nf = -f;
                let (ar, ur) = (a[r].clone(), u[r].clone());
                axpy(&mut a[i], &nf, &ar);
                axpy(&mut u[i], &nf, &ur);
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Hnf { h: a, pivots, u }
}

/// Common denominator and integer numerators of a rational matrix.
pub fn clear_rational(m: &GoldenMatrix) -> Result<(BigInt, Vec<IVec>), LinalgError> {
    if !m.is_rational() {
        return Err(LinalgError::NonRational);
    }
    let mut den = BigInt::one();
    for v in m.data() {
        den = den.lcm(&v.rational_part().denom());
    }
    let rows = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|v| {
                    let r = v.rational_part();
                    r.numer() * (&den / r.denom())
                })
                .collect()
        })
        .collect();
    Ok((den, rows))
}

/// A lattice `(1/denom)·span(basis)` in Zᵏ ⊗ Q, canonical once constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerLatticeBasis {
    pub dim: usize,
    pub denom: BigInt,
    pub basis: Vec<IVec>,
}

impl IntegerLatticeBasis {
    /// Lattice spanned by arbitrary integer generators scaled by `1/denom`.
    pub fn from_generators(dim: usize, denom: BigInt, gens: &[IVec]) -> Self {
        assert!(denom.is_positive(), "lattice denominator must be positive");
        let h = hnf(gens, dim);
        let mut g = denom.clone();
        for row in &h.h {
            for v in row {
                g = g.gcd(v);
            }
        }
        let basis = h.h.into_iter().map(|row| row.into_iter().map(|v| v / &g).collect()).collect();
        IntegerLatticeBasis { dim, denom: denom / g, basis }
    }

    pub fn from_i64(dim: usize, gens: &[Vec<i64>]) -> Self {
        let gens: Vec<IVec> = gens.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        Self::from_generators(dim, BigInt::one(), &gens)
    }

    pub fn standard(dim: usize) -> Self {
        let gens: Vec<IVec> = (0..dim)
            .map(|i| (0..dim).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        Self::from_generators(dim, BigInt::one(), &gens)
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|r| r.iter().position(|v| !v.is_zero()).expect("nonzero row")).collect()
    }

    /// Integer coordinates of `v/v_denom` in this basis, if it is a lattice vector.
    pub fn coordinates(&self, v: &[BigInt], v_denom: &BigInt) -> Option<IVec> {
        let mut w = Vec::with_capacity(v.len());
        for x in v {
            let (q, r) = (x * &self.denom).div_rem(v_denom);
            if !r.is_zero() {
                return None;
            }
            w.push(q);
        }
        let mut coords = Vec::with_capacity(self.rank());
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            let (t, r) = w[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            axpy(&mut w, &-&t, row);
            coords.push(t);
        }
        w.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt], v_denom: &BigInt) -> bool {
        self.coordinates(v, v_denom).is_some()
    }

    pub fn contains_lattice(&self, other: &IntegerLatticeBasis) -> bool {
        other.basis.iter().all(|b| self.contains(b, &other.denom))
    }

    /// The vector `(1/denom)·Σ tᵢ bᵢ` as numerators over `denom`.
    pub fn combine(&self, t: &[BigInt]) -> IVec {
        let mut out = vec![BigInt::zero(); self.dim];
        for (ti, row) in t.iter().zip(&self.basis) {
            axpy(&mut out, ti, row);
        }
        out
    }

    pub fn scaled(&self, f: i64) -> Self {
        let gens: Vec<IVec> = self.basis.iter().map(|r| r.iter().map(|v| v * f).collect()).collect();
        Self::from_generators(self.dim, self.denom.clone(), &gens)
    }
}

impl Serialize for IntegerLatticeBasis {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let basis: Vec<Vec<String>> =
            self.basis.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        let mut st = s.serialize_struct("IntegerLatticeBasis", 3)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("denom", &self.denom.to_string())?;
        st.serialize_field("basis", &basis)?;
        st.end()
    }
}

/// `{x ∈ Zᵏ : Mx = 0}` for rational `M`.
pub fn integer_kernel(m: &GoldenMatrix) -> Result<IntegerLatticeBasis, LinalgError> {
    let (_, rows) = clear_rational(m)?;
    let k = m.cols();
    // Row j of the transpose is column j of M, so x·Mᵀ = (Mx)ᵀ.
    let t: Vec<IVec> = (0..k).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
    let h = hnf(&t, m.rows());
    Ok(IntegerLatticeBasis::from_generators(k, BigInt::one(), h.left_kernel()))
}

/// The lattice `M(Zᵏ)` for rational `M`, recorded as `(1/D)·span` with `D` the common denominator.
pub fn image_lattice_basis(m: &GoldenMatrix) -> Result<IntegerLatticeBasis, LinalgError> {
    let (den, rows) = clear_rational(m)?;
    let cols: Vec<IVec> = (0..m.cols()).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
    Ok(IntegerLatticeBasis::from_generators(m.rows(), den, &cols))
}

/// Index `[sup : sub]` of a full-rank sublattice.
pub fn lattice_index(sub: &IntegerLatticeBasis, sup: &IntegerLatticeBasis) -> Result<BigInt, LinalgError> {
    if sub.dim != sup.dim || sub.rank() != sup.rank() {
        return Err(LinalgError::RankMismatch { sub: sub.rank(), sup: sup.rank() });
    }
    let mut coords = Vec::with_capacity(sub.rank());
    for b in &sub.basis {
        coords.push(sup.coordinates(b, &sub.denom).ok_or(LinalgError::NotSublattice)?);
    }
    Ok(int_determinant(&coords).abs())
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn int_determinant(m: &[IVec]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut prev = BigInt::one();
    let mut sign = 1;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            a.swap(p, c);
            sign = -sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                a[i][j] = (&a[i][j] * &a[c][c] - &a[i][c] * &a[c][j]) / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[c][c].clone();
    }
    if sign < 0 { -prev } else { prev }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(v: &[i64]) -> IVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn index_of_doubled_lattice() {
        let z4 = IntegerLatticeBasis::standard(4);
        assert_eq!(lattice_index(&z4.scaled(2), &z4).unwrap(), BigInt::from(16));
        assert_eq!(lattice_index(&z4, &z4).unwrap(), BigInt::one());
        assert!(matches!(lattice_index(&z4, &z4.scaled(2)), Err(LinalgError::NotSublattice)));
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let k = integer_kernel(&GoldenMatrix::zeros(2, 3)).unwrap();
        assert_eq!(k, IntegerLatticeBasis::standard(3));
        assert_eq!(image_lattice_basis(&GoldenMatrix::identity(3)).unwrap(), IntegerLatticeBasis::standard(3));
    }

    #[test]
    fn transform_reproduces_hnf() {
        let rows = vec![iv(&[4, -1, -1]), iv(&[-1, 4, -1]), iv(&[-1, -1, 4]), iv(&[2, 2, 2])];
        let h = hnf(&rows, 3);
        for (i, hrow) in h.h.iter().enumerate() {
            let mut acc = vec![BigInt::zero(); 3];
            for (j, r) in rows.iter().enumerate() {
                axpy(&mut acc, &h.u[i][j], r);
            }
            assert_eq!(&acc, hrow);
        }
        assert_eq!(int_determinant(&h.u).abs(), BigInt::one());
    }

    proptest! {
        #[test]
        fn hnf_is_canonical(gens in proptest::collection::vec(proptest::collection::vec(-6i64..=6, 3), 1..5),
                            mix in proptest::collection::vec(-3i64..=3, 16)) {
            let a = IntegerLatticeBasis::from_i64(3, &gens);
            // Append integer combinations of the generators: same lattice.
            let mut more = gens.clone();
            for (i, m) in mix.chunks(gens.len().min(4)).enumerate().take(3) {
                let mut v = vec![0i64; 3];
                for (c, g) in m.iter().zip(&gens) {
                    for t in 0..3 { v[t] += c * g[t]; }
                }
                if i % 2 == 0 { more.push(v) } else { more.insert(0, v) }
            }
            let b = IntegerLatticeBasis::from_i64(3, &more);
            prop_assert_eq!(a, b);
        }

        #[test]
        fn kernel_plus_image_rank(rows in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 5), 1..4)) {
            let m = GoldenMatrix::from_i64_rows(&rows).unwrap();
            let ker = integer_kernel(&m).unwrap();
            let img = image_lattice_basis(&m).unwrap();
            prop_assert_eq!(ker.rank() + img.rank(), 5);
            for b in &ker.basis {
                let x: Vec<i64> = b.iter().map(|v| i64::try_from(v).unwrap()).collect();
                prop_assert!(m.mul_int_vec(&x).iter().all(|v| v.is_zero()));
            }
        }
    }
}
