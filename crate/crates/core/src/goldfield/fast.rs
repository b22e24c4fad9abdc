//! Machine-integer elements `a + b√5` of Z[√5] for hot-loop predicates.
//!
//! Linear forms with coefficients in Q(√5) are compiled once into a common
//! denominator so that evaluating them on integer points needs only `i128`
//! additions and one exact sign test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::{GoldenScalar, Rational};

/// Largest coefficient magnitude accepted when compiling a form; keeps every
/// evaluation (linear or quadratic) on points with coordinates below 2^20
/// and dimension below 64 inside `i128`.
const COEFF_LIMIT: i128 = 1 << 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IntGolden {
    pub a: i128,
    pub b: i128,
}

impl IntGolden {
    pub const ZERO: IntGolden = IntGolden { a: 0, b: 0 };

    /// Exact sign of `a + b√5`.
    pub fn signum(self) -> i32 {
        let sa = self.a.signum() as i32;
        let sb = self.b.signum() as i32;
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = self.a.checked_mul(self.a);
        let b2 = self.b.checked_mul(self.b).and_then(|v| v.checked_mul(5));
        let ord = match (a2, b2) {
            (Some(x), Some(y)) => x.cmp(&y),
            _ => {
                let a = BigInt::from(self.a);
                let b = BigInt::from(self.b);
                (&a * &a).cmp(&(&b * &b * 5))
            }
        };
        match ord {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => unreachable!("sqrt5 is irrational"),
        }
    }

}

impl std::ops::Sub for IntGolden {
    type Output = IntGolden;

    fn sub(self, o: IntGolden) -> IntGolden {
        IntGolden { a: self.a - o.a, b: self.b - o.b }
    }
}

/// Scales `values` by the least common denominator `D` and returns the
/// integer pairs, or `None` if any scaled coefficient exceeds the limit.
pub fn clear_denominators(values: &[GoldenScalar]) -> Option<(BigInt, Vec<IntGolden>)> {
    let mut den = BigInt::one();
    for v in values {
        den = den.lcm(&v.denominator_lcm());
    }
    let scale = Rational::from(den.clone());
    let mut out = Vec::with_capacity(values.len());
    for v in values {
        let s = v.scale(&scale);
        let a = s.rational_part().numer();
        let b = s.sqrt5_part().numer();
        let (a, b) = (a.to_i128()?, b.to_i128()?);
        if a.abs() > COEFF_LIMIT || b.abs() > COEFF_LIMIT {
            return None;
        }
        out.push(IntGolden { a, b });
    }
    Some((den, out))
}

/// A two-sided linear constraint `lower ≤ ⟨w, x⟩ ≤ upper` on integer points,
/// with every quantity pre-multiplied by a common positive denominator.
#[derive(Debug, Clone)]
pub struct IntSlab {
    pub coeffs: Vec<IntGolden>,
    pub lower: IntGolden,
    pub upper: IntGolden,
}

impl IntSlab {
    pub fn compile(
        w: &[GoldenScalar],
        lower: &GoldenScalar,
        upper: &GoldenScalar,
    ) -> Option<IntSlab> {
        let mut all: Vec<GoldenScalar> = w.to_vec();
        all.push(lower.clone());
        all.push(upper.clone());
        let (_, mut ints) = clear_denominators(&all)?;
        let upper = ints.pop()?;
        let lower = ints.pop()?;
        Some(IntSlab { coeffs: ints, lower, upper })
    }

    pub fn eval(&self, x: &[i64]) -> IntGolden {
        let mut acc = IntGolden::ZERO;
        for (c, &xi) in self.coeffs.iter().zip(x) {
            if xi != 0 {
                let xi = xi as i128;
                acc.a += c.a * xi;
                acc.b += c.b * xi;
            }
        }
        acc
    }

    /// `(sign(value − lower), sign(upper − value))`.
    pub fn margins(&self, x: &[i64]) -> (i32, i32) {
        let v = self.eval(x);
        ((v - self.lower).signum(), (self.upper - v).signum())
    }
}

/// `xᵀ Q x` with Q a symmetric matrix over Q(√5), compiled to integers.
#[derive(Debug, Clone)]
pub struct IntQuadratic {
    k: usize,
    entries: Vec<IntGolden>,
    bound: IntGolden,
}

impl IntQuadratic {
    /// Compiles the test `xᵀ Q x ≤ bound`. `q` is row-major `k×k`.
    pub fn compile(k: usize, q: &[GoldenScalar], bound: &GoldenScalar) -> Option<IntQuadratic> {
        let mut all = q.to_vec();
        all.push(bound.clone());
        let (_, mut ints) = clear_denominators(&all)?;
        let bound = ints.pop()?;
        Some(IntQuadratic { k, entries: ints, bound })
    }

    pub fn value(&self, x: &[i64]) -> IntGolden {
        let mut acc = IntGolden::ZERO;
        for i in 0..self.k {
            if x[i] == 0 {
                continue;
            }
            let row = &self.entries[i * self.k..(i + 1) * self.k];
            let mut ra = 0i128;
            let mut rb = 0i128;
            for (e, &xj) in row.iter().zip(x) {
                if xj != 0 {
                    ra += e.a * xj as i128;
                    rb += e.b * xj as i128;
                }
            }
            acc.a += ra * x[i] as i128;
            acc.b += rb * x[i] as i128;
        }
        acc
    }

    /// Sign of `bound − xᵀQx` (non-negative means inside).
    pub fn slack_sign(&self, x: &[i64]) -> i32 {
        (self.bound - self.value(x)).signum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_agrees_with_field() {
        for (a, b) in [(9i128, -4i128), (-9, 4), (0, 3), (5, 0), (2207, -987), (-2207, 987)] {
            let g = GoldenScalar::new(Rational::from(a as i64), Rational::from(b as i64));
            assert_eq!(IntGolden { a, b }.signum(), g.signum());
        }
        let huge = IntGolden { a: i128::MAX / 2, b: -(i128::MAX / 4) };
        assert_eq!(huge.signum(), -1);
    }

    #[test]
    fn slab_matches_exact_evaluation() {
        let w = vec![GoldenScalar::frac(1, 5, 1, 10), GoldenScalar::frac(-2, 3, 0, 1)];
        let lo = GoldenScalar::frac(-1, 2, 0, 1);
        let hi = GoldenScalar::frac(1, 1, -1, 7);
        let slab = IntSlab::compile(&w, &lo, &hi).unwrap();
        for x0 in -3..=3i64 {
            for x1 in -3..=3i64 {
                let v = &w[0] * &GoldenScalar::from_int(x0) + &w[1] * &GoldenScalar::from_int(x1);
                let (l, u) = slab.margins(&[x0, x1]);
                assert_eq!(l, (&v - &lo).signum());
                assert_eq!(u, (&hi - &v).signum());
            }
        }
    }
}
