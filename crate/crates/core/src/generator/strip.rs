use num_traits::Zero;

use super::GeneratorError;
use crate::cluster::ClusterSpec;
use crate::geometry::{compile_halfspaces, zonotope_facets, CompiledSurface, HalfspaceRep, Membership, Zonotope};
use crate::goldfield::{GVec, GoldenScalar, IntQuadratic, Rational};
use crate::linalg::{dot, GoldenMatrix};
use crate::round_sig;
use crate::scheme::{build_projectors, reduce, ProjectorSet, ReducedScheme};

/// The strip `{x ∈ Zᵏ : π⊥x ∈ π⊥([0,1]ᵏ + γ)}` of one cluster and shift.
#[derive(Debug, Clone)]
pub struct Strip {
    pub cluster: ClusterSpec,
    pub projectors: ProjectorSet,
    pub gamma: GVec,
    /// Facets of the window `K + π⊥γ`, in superspace coordinates.
    pub window: HalfspaceRep,
    compiled: Option<CompiledSurface>,
}

impl Strip {
    pub fn new(cluster: ClusterSpec, gamma: GVec) -> Result<Self, GeneratorError> {
        let projectors = build_projectors(&cluster)?;
        Self::with_projectors(cluster, projectors, gamma)
    }

    pub fn with_projectors(cluster: ClusterSpec, projectors: ProjectorSet, gamma: GVec) -> Result<Self, GeneratorError> {
        if gamma.len() != cluster.k {
            return Err(GeneratorError::ShiftLength { expected: cluster.k, found: gamma.len() });
        }
        let zonotope = Zonotope::from_projector(&projectors.pi_perp, &gamma)?;
        let window = zonotope_facets(&zonotope)?;
        let compiled = compile_halfspaces(&window, &projectors.pi_perp, false);
        Ok(Strip { cluster, projectors, gamma, window, compiled })
    }

    pub fn k(&self) -> usize {
        self.cluster.k
    }

    /// Three-valued window test of `π⊥x`.
    pub fn accepts(&self, x: &[i64]) -> Membership {
        match &self.compiled {
            Some(c) => c.contains(x),
            None => self.accepts_exact(x),
        }
    }

    /// Same as [`Strip::accepts`] but evaluated in Q(√5) throughout.
    pub fn accepts_exact(&self, x: &[i64]) -> Membership {
        let y = self.projectors.pi_perp.mul_int_vec(x);
        self.window.contains(&y).expect("window lives in superspace")
    }

    /// `|πε₁|²`, the squared edge unit in superspace.
    pub fn edge_sq(&self) -> &GoldenScalar {
        self.projectors.pi.get(0, 0)
    }

    /// Physical ball of `radius` edge units.
    pub fn ball(&self, radius: &Rational) -> Ball {
        let bound = self.edge_sq().scale(&(radius * radius));
        Ball::new(&self.projectors.pi, bound)
    }

    /// `Σⱼ (πx)ⱼ eⱼ` in floating physical coordinates, empty without an embedding.
    pub fn phys(&self, x: &[i64]) -> Vec<f64> {
        let Some(emb) = &self.cluster.embedding else {
            return vec![];
        };
        let px = self.projectors.pi.mul_int_vec(x);
        (0..self.cluster.n)
            .map(|a| round_sig(px.iter().zip(emb).map(|(p, e)| p.to_f64() * e[a]).sum()))
            .collect()
    }

    /// Per-coordinate reach of the ball, `R·|πε₁|·|πεₗ|`, as floats.
    pub(crate) fn reach(&self, radius: &Rational) -> Vec<f64> {
        let r = radius.to_f64();
        let e = self.edge_sq().to_f64();
        (0..self.k()).map(|l| r * (e * self.projectors.pi.get(l, l).to_f64()).sqrt()).collect()
    }

    /// Largest cluster vector length in edge units, rounded up.
    pub fn max_vector_ratio(&self) -> i64 {
        let e = self.edge_sq().to_f64();
        (0..self.k())
            .map(|i| (self.projectors.pi.get(i, i).to_f64() / e).sqrt().ceil() as i64)
            .max()
            .unwrap_or(1)
    }

    pub fn reduce(&self) -> Result<ReducedScheme, GeneratorError> {
        Ok(reduce(&self.projectors, &self.gamma)?)
    }
}

/// Exact test `xᵀπx ≤ bound` on integer points.
#[derive(Debug, Clone)]
pub struct Ball {
    quad: Option<IntQuadratic>,
    pi: GoldenMatrix,
    bound: GoldenScalar,
}

impl Ball {
    fn new(pi: &GoldenMatrix, bound: GoldenScalar) -> Self {
        let k = pi.rows();
        let quad = IntQuadratic::compile(k, pi.data(), &bound);
        Ball { quad, pi: pi.clone(), bound }
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        match &self.quad {
            Some(q) => q.slack_sign(x) >= 0,
            None => {
                let px = self.pi.mul_int_vec(x);
                let xs: GVec = x.iter().map(|&v| GoldenScalar::from_int(v)).collect();
                (&self.bound - &dot(&xs, &px)).signum() >= 0
            }
        }
    }
}

/// Reciprocals of distinct primes from 3 on: `(1/3, 1/7, 1/11, 1/13, …)`.
/// 5 is skipped so no coordinate has a denominator shared with √5 terms.
pub fn generic_shift(k: usize) -> GVec {
    let mut primes = Vec::with_capacity(k);
    let mut n = 3i64;
    while primes.len() < k {
        if n != 5 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0) {
            primes.push(n);
        }
        n += 2;
    }
    primes.into_iter().map(|p| GoldenScalar::from(Rational::new(1, p))).collect()
}

/// `γ = −π⊥(½·𝟙)`: the window is centred on the origin of internal space.
pub fn centered_shift(projectors: &ProjectorSet) -> GVec {
    let half = vec![GoldenScalar::frac(-1, 2, 0, 1); projectors.k()];
    projectors.pi_perp.mul_vec(&half).expect("square")
}

/// Parses `generic`, `zero`, `center` or a comma-separated list of exact values.
pub fn parse_shift(s: &str, projectors: &ProjectorSet) -> Result<GVec, GeneratorError> {
    let k = projectors.k();
    let gamma: GVec = match s.trim() {
        "generic" => generic_shift(k),
        "zero" | "0" => vec![GoldenScalar::zero(); k],
        "center" => centered_shift(projectors),
        list => list
            .split(',')
            .map(|t| t.trim().parse::<GoldenScalar>().map_err(|e| GeneratorError::Format(format!("shift entry {t:?}: {e}"))))
            .collect::<Result<_, _>>()?,
    };
    if gamma.len() != k {
        return Err(GeneratorError::ShiftLength { expected: k, found: gamma.len() });
    }
    Ok(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::catalog;

    fn strip(name: &str, gamma: Option<GVec>) -> Strip {
        let c = catalog(name).unwrap();
        let k = c.k;
        Strip::new(c, gamma.unwrap_or_else(|| vec![GoldenScalar::zero(); k])).unwrap()
    }

    #[test]
    fn origin_membership_at_zero_shift() {
        // π⊥(0) is interior exactly when π⊥λ = 0 has a positive solution,
        // i.e. when some physical u has u·eᵢ > 0 for every i. The decagon
        // vectors sum to zero; the other two sets sit in a hemisphere.
        for (name, want) in [("decagon", Membership::Boundary), ("icosahedron", Membership::Inside), ("dodecahedron", Membership::Inside)] {
            let s = strip(name, None);
            let x = vec![0; s.k()];
            assert_eq!(s.accepts(&x), want, "{name}");
            assert_eq!(s.accepts_exact(&x), want, "{name}");
            let emb = s.cluster.embedding.clone().unwrap();
            let u: Vec<f64> = (0..emb[0].len()).map(|a| emb.iter().map(|e| e[a]).sum()).collect();
            let hemisphere = emb.iter().all(|e| e.iter().zip(&u).map(|(p, q)| p * q).sum::<f64>() > 1e-9);
            assert_eq!(hemisphere, want == Membership::Inside, "{name}");
        }
    }

    #[test]
    fn centered_window_holds_origin_inside() {
        let s = strip("decagon", None);
        let g = centered_shift(&s.projectors);
        let s = Strip::new(s.cluster, g).unwrap();
        assert_eq!(s.accepts(&[0; 5]), Membership::Inside);
    }

    #[test]
    fn opposite_corner_is_boundary() {
        assert_eq!(strip("decagon", None).accepts(&[1; 5]), Membership::Boundary);
    }

    #[test]
    fn compiled_and_exact_agree() {
        let s = strip("icosahedron", Some(generic_shift(6)));
        for x in [[0, 0, 0, 0, 0, 0], [1, 0, -1, 0, 0, 0], [2, 1, 0, -1, 0, 1], [0, 1, 1, 1, 1, 1], [3, -2, 0, 0, 1, 0]] {
            assert_eq!(s.accepts(&x), s.accepts_exact(&x));
        }
    }

    #[test]
    fn generic_shift_values() {
        let g = generic_shift(5);
        let want: Vec<GoldenScalar> = [3, 7, 11, 13, 17].iter().map(|&p| GoldenScalar::from(Rational::new(1, p))).collect();
        assert_eq!(g, want);
        assert_eq!(generic_shift(20).len(), 20);
    }

    #[test]
    fn ball_counts_edges() {
        let s = strip("decagon", None);
        let b = s.ball(&Rational::from(1));
        assert!(b.contains(&[1, 0, 0, 0, 0]));
        assert!(b.contains(&[0, 0, 0, 0, -1]));
        // |e₁ + e₂|² = 2 + 2cos 72° = τ + 1.
        assert!(!b.contains(&[1, 1, 0, 0, 0]));
        assert!(!s.ball(&Rational::new(99, 100)).contains(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn phys_reproduces_cluster_vectors() {
        let s = strip("icosahedron", None);
        let emb = s.cluster.embedding.clone().unwrap();
        for i in 0..6 {
            let mut x = vec![0; 6];
            x[i] = 1;
            for (a, b) in s.phys(&x).iter().zip(&emb[i]) {
                assert!((a - b).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn shift_parsing() {
        let s = strip("decagon", None);
        assert_eq!(parse_shift("generic", &s.projectors).unwrap(), generic_shift(5));
        assert_eq!(parse_shift("1/2, 0, 0, 0, 1/2+1/2*sqrt5", &s.projectors).unwrap()[4], GoldenScalar::tau());
        assert!(matches!(parse_shift("1,2", &s.projectors), Err(GeneratorError::ShiftLength { .. })));
        assert!(parse_shift("1,2,x,4,5", &s.projectors).is_err());
    }
}
