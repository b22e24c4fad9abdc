use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LinalgError;
use crate::goldfield::{GoldenScalar, Rational};

/// Dense row-major matrix over Q(√5).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GoldenScalar>,
}

impl GoldenMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<GoldenScalar>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch {
                op: "new",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(GoldenMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        GoldenMatrix { rows, cols, data: vec![GoldenScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = GoldenScalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GoldenScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        GoldenMatrix { rows, cols, data }
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<GoldenScalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Ragged);
        }
        Ok(GoldenMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| GoldenScalar::from_int(v)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GoldenScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GoldenScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[GoldenScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<GoldenScalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn data(&self) -> &[GoldenScalar] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<GoldenScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map(&self, f: impl Fn(&GoldenScalar) -> GoldenScalar) -> Self {
        GoldenMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mat_mul(&self, other: &GoldenMatrix) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        other: &GoldenMatrix,
        op: &'static str,
        f: impl Fn(&GoldenScalar, &GoldenScalar) -> GoldenScalar,
    ) -> Result<Self, LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::ShapeMismatch { op, left: self.shape(), right: other.shape() });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(GoldenMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn mat_add(&self, other: &GoldenMatrix) -> Result<Self, LinalgError> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn mat_sub(&self, other: &GoldenMatrix) -> Result<Self, LinalgError> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    pub fn scale(&self, s: &GoldenScalar) -> Self {
        self.map(|v| v * s)
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        self.map(|v| v.scale(s))
    }

    /// Entrywise Galois conjugate √5 ↦ −√5.
    pub fn conjugate(&self) -> Self {
        self.map(GoldenScalar::conjugate)
    }

    pub fn trace(&self) -> GoldenScalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn is_rational(&self) -> bool {
        self.data.iter().all(GoldenScalar::is_rational)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GoldenScalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul_vec(&self, v: &[GoldenScalar]) -> Result<Vec<GoldenScalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::ShapeMismatch {
                op: "mul_vec",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    /// `M·x` for an integer vector, skipping zero coordinates.
    pub fn mul_int_vec(&self, x: &[i64]) -> Vec<GoldenScalar> {
        assert_eq!(x.len(), self.cols, "mul_int_vec: length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = GoldenScalar::zero();
                for (e, &xi) in self.row(i).iter().zip(x) {
                    if xi != 0 && !e.is_zero() {
                        acc += &e.scale(&Rational::from(xi));
                    }
                }
                acc
            })
            .collect()
    }

    /// Sub-matrix of the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).iter().map(GoldenScalar::to_f64).collect()).collect()
    }
}

pub fn dot(a: &[GoldenScalar], b: &[GoldenScalar]) -> GoldenScalar {
    let mut acc = GoldenScalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

impl<'a> Mul<&'a GoldenMatrix> for &'a GoldenMatrix {
    type Output = GoldenMatrix;
    fn mul(self, rhs: &GoldenMatrix) -> GoldenMatrix {
        self.mat_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl<'a> Add<&'a GoldenMatrix> for &'a GoldenMatrix {
    type Output = GoldenMatrix;
    fn add(self, rhs: &GoldenMatrix) -> GoldenMatrix {
        self.mat_add(rhs).expect("matrix sum shape mismatch")
    }
}

impl<'a> Sub<&'a GoldenMatrix> for &'a GoldenMatrix {
    type Output = GoldenMatrix;
    fn sub(self, rhs: &GoldenMatrix) -> GoldenMatrix {
        self.mat_sub(rhs).expect("matrix difference shape mismatch")
    }
}

impl Neg for &GoldenMatrix {
    type Output = GoldenMatrix;
    fn neg(self) -> GoldenMatrix {
        self.map(|v| -v)
    }
}

impl fmt::Debug for GoldenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GoldenMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for GoldenMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GoldenMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<GoldenScalar>>::deserialize(d)?;
        GoldenMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
