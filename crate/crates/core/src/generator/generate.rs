use std::collections::{HashMap, HashSet, VecDeque};

use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{Ball, GeneratorError, Pattern, Strip};
use crate::geometry::Membership;
use crate::goldfield::{GoldenScalar, Rational};
use crate::linalg::dot;
use crate::scheme::{CosetSlice, ReducedScheme};

/// Slack added to floating bounds before rounding outward.
const PAD: f64 = 1e-6;

/// Half-width of the default BFS seed box.
pub const SEED_BOX: i64 = 2;

fn check_radius(radius: &Rational) -> Result<(), GeneratorError> {
    if radius.signum() <= 0 {
        return Err(GeneratorError::NonPositiveRadius(radius.to_string()));
    }
    Ok(())
}

fn outward(lo: f64, hi: f64) -> (i64, i64) {
    ((lo - PAD).floor() as i64, (hi + PAD).ceil() as i64)
}

/// Integer box containing every accepted point of the ball.
///
/// `xₗ = (πx)ₗ + (π⊥x)ₗ`; the first term is at most `R·|πε₁|·|πεₗ|` in size and
/// the second ranges over the support of the window in direction `εₗ`.
pub fn coordinate_bounds(strip: &Strip, radius: &Rational) -> Vec<(i64, i64)> {
    let reach = strip.reach(radius);
    (0..strip.k())
        .map(|l| {
            let col = strip.projectors.pi_perp.col(l);
            let mut lo = dot(&col, &strip.gamma);
            let mut hi = lo.clone();
            for v in &col {
                match v.signum() {
                    1 => hi += v,
                    -1 => lo += v,
                    _ => {}
                }
            }
            outward(lo.to_f64() - reach[l], hi.to_f64() + reach[l])
        })
        .collect()
}

/// Exhaustive search over [`coordinate_bounds`]; the reference generator.
pub fn generate_box(strip: &Strip, radius: &Rational) -> Result<Pattern, GeneratorError> {
    check_radius(radius)?;
    let bounds = coordinate_bounds(strip, radius);
    let ball = strip.ball(radius);
    let k = strip.k();
    let hits: Vec<(Vec<i64>, bool)> = (bounds[0].0..=bounds[0].1)
        .into_par_iter()
        .flat_map_iter(|x0| {
            let mut out = Vec::new();
            let mut x: Vec<i64> = bounds.iter().map(|b| b.0).collect();
            x[0] = x0;
            loop {
                if ball.contains(&x) {
                    let m = strip.accepts(&x);
                    if m.accepted() {
                        out.push((x.clone(), m == Membership::Boundary));
                    }
                }
                let mut i = k;
                loop {
                    if i <= 1 {
                        return out;
                    }
                    i -= 1;
                    if x[i] < bounds[i].1 {
                        x[i] += 1;
                        break;
                    }
                    x[i] = bounds[i].0;
                }
            }
        })
        .collect();
    Ok(Pattern::from_hits(strip, radius, hits))
}

fn scan_shell(strip: &Strip, ball: &Ball, x: &mut [i64], i: usize, left: i64) -> bool {
    let k = x.len();
    if i == k {
        return left == 0 && ball.contains(x) && strip.accepts(x).accepted();
    }
    let rest = (k - i - 1) as i64 * SEED_BOX;
    for v in -SEED_BOX..=SEED_BOX {
        let used = v.abs();
        if used > left || left - used > rest {
            continue;
        }
        x[i] = v;
        if scan_shell(strip, ball, x, i + 1, left - used) {
            return true;
        }
    }
    x[i] = 0;
    false
}

/// First accepted point of `[−2,2]ᵏ` inside the ball, by ℓ¹ norm and then lexicographically.
pub fn find_seed(strip: &Strip, radius: &Rational) -> Option<Vec<i64>> {
    let ball = strip.ball(radius);
    let k = strip.k();
    let mut x = vec![0i64; k];
    (0..=SEED_BOX * k as i64).find(|&s| scan_shell(strip, &ball, &mut x, 0, s)).map(|_| x)
}

/// Extra radius explored by the BFS so that points joined only through the
/// rim of the ball are still reached.
pub fn bfs_margin(strip: &Strip) -> Rational {
    Rational::from(2 * strip.max_vector_ratio())
}

/// Breadth-first closure of `seed` under `x ↦ x ± εᵢ`, restricted to the ball.
pub fn generate_bfs(strip: &Strip, radius: &Rational, seed: Option<&[i64]>) -> Result<Pattern, GeneratorError> {
    check_radius(radius)?;
    let ball = strip.ball(radius);
    let k = strip.k();
    let seed = match seed {
        Some(s) => {
            if s.len() != k || !ball.contains(s) || !strip.accepts(s).accepted() {
                return Err(GeneratorError::SeedRejected(s.to_vec()));
            }
            s.to_vec()
        }
        None => find_seed(strip, radius).ok_or(GeneratorError::NoSeed)?,
    };
    let outer = strip.ball(&(radius + &bfs_margin(strip)));
    let mut accepted: HashMap<Vec<i64>, bool> = HashMap::new();
    let mut rejected: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    accepted.insert(seed.clone(), strip.accepts(&seed) == Membership::Boundary);
    queue.push_back(seed);
    while let Some(x) = queue.pop_front() {
        for i in 0..k {
            for step in [1, -1] {
                let mut y = x.clone();
                y[i] += step;
                if accepted.contains_key(&y) || rejected.contains(&y) {
                    continue;
                }
                let m = if outer.contains(&y) { strip.accepts(&y) } else { Membership::Outside };
                if m.accepted() {
                    accepted.insert(y.clone(), m == Membership::Boundary);
                    queue.push_back(y);
                } else {
                    rejected.insert(y);
                }
            }
        }
    }
    let hits = accepted.into_iter().filter(|(x, _)| ball.contains(x)).collect();
    Ok(Pattern::from_hits(strip, radius, hits))
}

fn lattice_rows(reduced: &ReducedScheme) -> (Vec<Vec<i64>>, Vec<usize>) {
    let rows = reduced
        .l
        .basis
        .iter()
        .map(|r| r.iter().map(|v| v.to_i64().expect("small lattice basis")).collect())
        .collect();
    (rows, reduced.l.pivots())
}

struct CosetWalk<'a> {
    rows: &'a [Vec<i64>],
    pivots: &'a [usize],
    bounds: Vec<(i64, i64)>,
}

impl CosetWalk<'_> {
    fn range(&self, i: usize, acc: &[i64]) -> (i64, i64) {
        let p = self.pivots[i];
        let piv = self.rows[i][p];
        debug_assert!(piv > 0);
        let (lo, hi) = self.bounds[p];
        (-Integer::div_floor(&(acc[p] - lo), &piv), Integer::div_floor(&(hi - acc[p]), &piv))
    }

    fn walk(&self, i: usize, acc: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
        if i == self.rows.len() {
            if acc.iter().zip(&self.bounds).all(|(v, b)| b.0 <= *v && *v <= b.1) {
                visit(acc);
            }
            return;
        }
        let (tmin, tmax) = self.range(i, acc);
        let row = &self.rows[i];
        for t in tmin..=tmax {
            for (a, r) in acc.iter_mut().zip(row) {
                *a += t * r;
            }
            self.walk(i + 1, acc, visit);
            for (a, r) in acc.iter_mut().zip(row) {
                *a -= t * r;
            }
        }
    }
}

fn coset_points(strip: &Strip, reduced: &ReducedScheme, c: &CosetSlice, ball: &Ball, radius: &Rational) -> Vec<(Vec<i64>, bool)> {
    let (rows, pivots) = lattice_rows(reduced);
    let reach = strip.reach(radius);
    let bb = c.surface.bounding_box().expect("nonempty surface");
    let bounds = (0..strip.k())
        .map(|l| {
            let lo: GoldenScalar = &c.offset[l] + &bb[l].0;
            let hi: GoldenScalar = &c.offset[l] + &bb[l].1;
            outward(lo.to_f64() - reach[l], hi.to_f64() + reach[l])
        })
        .collect();
    let pi_prime = &reduced.projectors.pi_prime;
    let compiled = c.surface.compile(pi_prime);
    let classify = |y: &[i64]| match &compiled {
        Some(cs) => cs.contains(y),
        None => c.surface.contains(&pi_prime.mul_int_vec(y)).expect("surface in superspace"),
    };
    let walk = CosetWalk { rows: &rows, pivots: &pivots, bounds };
    let collect_from = |first: Option<i64>| {
        let mut out = Vec::new();
        let mut acc = c.z.clone();
        let mut visit = |y: &[i64]| {
            if ball.contains(y) {
                let m = classify(y);
                if m.accepted() {
                    out.push((y.to_vec(), m == Membership::Boundary || c.offset_boundary));
                }
            }
        };
        match first {
            None => walk.walk(0, &mut acc, &mut visit),
            Some(t) => {
                for (a, r) in acc.iter_mut().zip(&rows[0]) {
                    *a += t * r;
                }
                walk.walk(1, &mut acc, &mut visit);
            }
        }
        out
    };
    if rows.is_empty() {
        return collect_from(None);
    }
    let (tmin, tmax) = walk.range(0, &c.z);
    (tmin..=tmax).into_par_iter().flat_map_iter(|t| collect_from(Some(t))).collect()
}

/// Union over cosets `zᵢ + L` of the points whose `π′`-image lies in the atomic surface.
pub fn generate_baake_moody(strip: &Strip, reduced: &ReducedScheme, radius: &Rational) -> Result<Pattern, GeneratorError> {
    check_radius(radius)?;
    if reduced.shift != strip.gamma {
        return Err(GeneratorError::ShiftMismatch);
    }
    let ball = strip.ball(radius);
    let hits: Vec<(Vec<i64>, bool)> = reduced
        .cosets
        .par_iter()
        .flat_map_iter(|c| coset_points(strip, reduced, c, &ball, radius))
        .collect();
    Ok(Pattern::from_hits(strip, radius, hits))
}
