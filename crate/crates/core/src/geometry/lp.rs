//! Dense two-phase simplex over Q(√5) with Bland's rule (no cycling, exact).

use num_traits::{One, Zero};

use crate::goldfield::{GVec, GoldenScalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: GoldenScalar, x: GVec },
}

struct Tableau {
    rows: Vec<GVec>,
    obj: GVec,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.width
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip().expect("nonzero pivot");
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        let prow = self.rows[r].clone();
        let eliminate = |row: &mut GVec| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.basis[r] = c;
    }

    /// Runs simplex iterations over columns `< allowed`; false when unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        let rhs = self.rhs();
        loop {
            let Some(c) = (0..allowed).find(|&j| self.obj[j].signum() < 0) else {
                return true;
            };
            let mut best: Option<(usize, GoldenScalar)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].signum() > 0 {
                    let ratio = row[rhs].checked_div(&row[c]).expect("positive");
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }
}

/// Maximizes `c·x` subject to `A x = b`, `x ≥ 0`.
pub fn maximize(c: &[GoldenScalar], a: &[GVec], b: &[GoldenScalar]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (ai, bi)) in a.iter().zip(b).enumerate() {
        let neg = bi.signum() < 0;
        let mut row: GVec = ai.iter().map(|v| if neg { -v } else { v.clone() }).collect();
        row.extend((0..m).map(|j| if i == j { GoldenScalar::one() } else { GoldenScalar::zero() }));
        row.push(if neg { -bi } else { bi.clone() });
        rows.push(row);
    }
    // Phase one: maximize −Σ artificials.
    let mut obj = vec![GoldenScalar::zero(); width + 1];
    for row in &rows {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[width] -= &row[width];
    }
    let mut t = Tableau { rows, obj, basis: (n..n + m).collect(), width };
    t.optimize(width);
    if !t.obj[width].is_zero() {
        return LpOutcome::Infeasible;
    }
    // Drive artificial variables out of the basis, dropping redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    let mut obj: GVec = (0..=width).map(|j| if j < n { -&c[j] } else { GoldenScalar::zero() }).collect();
    for (row, &bj) in t.rows.iter().zip(&t.basis) {
        let f = obj[bj].clone();
        if !f.is_zero() {
            for (o, v) in obj.iter_mut().zip(row) {
                if !v.is_zero() {
                    *o -= &(&f * v);
                }
            }
        }
    }
    t.obj = obj;
    if !t.optimize(n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![GoldenScalar::zero(); n];
    for (row, &bj) in t.rows.iter().zip(&t.basis) {
        if bj < n {
            x[bj] = row[width].clone();
        }
    }
    LpOutcome::Optimal { value: t.obj[width].clone(), x }
}

/// Whether `p` is a convex combination of `points`.
pub fn in_convex_hull(p: &[GoldenScalar], points: &[GVec]) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = p.len();
    let mut a: Vec<GVec> = (0..dim).map(|r| points.iter().map(|q| q[r].clone()).collect()).collect();
    a.push(vec![GoldenScalar::one(); points.len()]);
    let mut b = p.to_vec();
    b.push(GoldenScalar::one());
    let c = vec![GoldenScalar::zero(); points.len()];
    !matches!(maximize(&c, &a, &b), LpOutcome::Infeasible)
}

/// Largest `t` such that `p = Σ λᵢ qᵢ`, `Σ λᵢ = 1`, `λᵢ ≥ t`; `None` when `p`
/// is outside the affine hull. Positive means `p` is in the relative interior.
pub fn interior_margin(p: &[GoldenScalar], points: &[GVec]) -> Option<GoldenScalar> {
    let n = points.len();
    if n == 0 {
        return None;
    }
    let dim = p.len();
    // Variables μ (n), t⁺, t⁻ with λᵢ = μᵢ + t⁺ − t⁻.
    let mut sum = vec![GoldenScalar::zero(); dim];
    for q in points {
        for (s, x) in sum.iter_mut().zip(q) {
            *s += x;
        }
    }
    let mut a: Vec<GVec> = (0..dim)
        .map(|r| {
            let mut row: GVec = points.iter().map(|q| q[r].clone()).collect();
            row.push(sum[r].clone());
            row.push(-&sum[r]);
            row
        })
        .collect();
    let nn = GoldenScalar::from_int(n as i64);
    let mut last = vec![GoldenScalar::one(); n];
    last.push(nn.clone());
    last.push(-nn);
    a.push(last);
    let mut b = p.to_vec();
    b.push(GoldenScalar::one());
    let mut c = vec![GoldenScalar::zero(); n];
    c.push(GoldenScalar::one());
    c.push(-GoldenScalar::one());
    match maximize(&c, &a, &b) {
        LpOutcome::Optimal { value, .. } => Some(value),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("t is bounded by 1/n"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> GVec {
        xs.iter().map(|&x| GoldenScalar::from_int(x)).collect()
    }

    #[test]
    fn small_lp() {
        // max x + y s.t. x + 2y + s1 = 4, 3x + y + s2 = 6.
        let c = v(&[1, 1, 0, 0]);
        let a = vec![v(&[1, 2, 1, 0]), v(&[3, 1, 0, 1])];
        let b = v(&[4, 6]);
        match maximize(&c, &a, &b) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, GoldenScalar::frac(14, 5, 0, 1)),
            other => panic!("{other:?}"),
        }
        assert_eq!(maximize(&v(&[1, 0]), &[v(&[1, -1])], &v(&[0])), LpOutcome::Unbounded);
        assert_eq!(maximize(&v(&[1]), &[v(&[1])], &v(&[-1])), LpOutcome::Infeasible);
    }

    #[test]
    fn hull_membership() {
        let sq = vec![v(&[0, 0]), v(&[2, 0]), v(&[0, 2]), v(&[2, 2])];
        assert!(in_convex_hull(&v(&[1, 1]), &sq));
        assert!(!in_convex_hull(&v(&[3, 1]), &sq));
        assert!(interior_margin(&v(&[1, 1]), &sq).unwrap().signum() > 0);
        assert!(interior_margin(&v(&[2, 1]), &sq).unwrap().is_zero());
        assert!(interior_margin(&v(&[3, 1]), &sq).unwrap().signum() < 0);
        let seg = vec![v(&[0, 0]), v(&[2, 0])];
        assert!(interior_margin(&v(&[1, 1]), &seg).is_none());
    }
}
