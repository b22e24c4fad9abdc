use num_traits::ToPrimitive;
use serde::Serialize;

use super::SchemeError;
use crate::cluster::ClusterSpec;
use crate::goldfield::{GoldenScalar, Rational};
use crate::linalg::GoldenMatrix;

/// Orthogonal projectors onto physical space E, its complement, and the
/// split of the complement into the conjugate part E′ and the rational part E″.
#[derive(Debug, Clone, Serialize)]
pub struct ProjectorSet {
    pub pi: GoldenMatrix,
    pub pi_perp: GoldenMatrix,
    pub pi_prime: GoldenMatrix,
    pub pi_dprime: GoldenMatrix,
    pub rho_sq: GoldenScalar,
    pub kappa_sq: GoldenScalar,
    /// Dimensions `(n, s, d)` of E, E′, E″.
    pub dims: (usize, usize, usize),
}

impl ProjectorSet {
    pub fn k(&self) -> usize {
        self.pi.rows()
    }

    pub fn kappa_f64(&self) -> f64 {
        self.kappa_sq.to_f64().sqrt()
    }

    pub fn rho_f64(&self) -> f64 {
        self.rho_sq.to_f64().sqrt()
    }
}

fn integer_trace(m: &GoldenMatrix) -> Option<usize> {
    let t = m.trace();
    if t.is_rational() && t.rational_part().is_integer() {
        t.rational_part().numer().to_usize()
    } else {
        None
    }
}

/// `π = ρ²·gram` with `ρ² = n / trace(gram)`, `π′ = conj(π)`, `π″ = I − π − π′`.
///
/// When `π` is already rational its conjugate is itself, so E′ is taken to be
/// `{0}` and the whole complement is rational.
pub fn build_projectors(cluster: &ClusterSpec) -> Result<ProjectorSet, SchemeError> {
    let k = cluster.k;
    let gram = &cluster.gram;
    let trace = gram.trace();
    let rho_sq = GoldenScalar::from(Rational::from(cluster.n as i64))
        .checked_div(&trace)
        .map_err(|_| SchemeError::IdempotenceFailure("gram has zero trace".into()))?;
    let kappa_sq = rho_sq.recip().expect("nonzero");
    let pi = gram.scale(&rho_sq);
    if &pi * &pi != pi || !pi.is_symmetric() {
        return Err(SchemeError::IdempotenceFailure(format!(
            "rho^2 * gram is not an orthogonal projector for {}",
            cluster.name
        )));
    }
    let id = GoldenMatrix::identity(k);
    let pi_perp = &id - &pi;
    let pi_prime = if pi.is_rational() { GoldenMatrix::zeros(k, k) } else { pi.conjugate() };
    if &pi_prime * &pi_prime != pi_prime || !(&pi * &pi_prime).is_zero() {
        return Err(SchemeError::ConjugateNotProjector);
    }
    let pi_dprime = &pi_perp - &pi_prime;
    if !pi_dprime.is_rational() {
        return Err(SchemeError::RationalityFailure);
    }
    let n = integer_trace(&pi).ok_or_else(|| SchemeError::IdempotenceFailure("trace of pi is not an integer".into()))?;
    let s = integer_trace(&pi_prime).ok_or(SchemeError::ConjugateNotProjector)?;
    let d = k - n - s;
    debug_assert!(!rho_sq.is_zero());
    Ok(ProjectorSet { pi, pi_perp, pi_prime, pi_dprime, rho_sq, kappa_sq, dims: (n, s, d) })
}

/// Generators that fail to commute with one of the projectors.
#[derive(Debug, Clone, Default)]
pub struct InvarianceReport {
    pub failures: Vec<(usize, &'static str)>,
}

impl InvarianceReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_invariance(cluster: &ClusterSpec, p: &ProjectorSet) -> InvarianceReport {
    let mut failures = Vec::new();
    for (gi, g) in cluster.generators.iter().enumerate() {
        let m = g.matrix();
        for (name, proj) in [("pi", &p.pi), ("pi_prime", &p.pi_prime), ("pi_dprime", &p.pi_dprime)] {
            if &m * proj != proj * &m {
                failures.push((gi, name));
            }
        }
    }
    InvarianceReport { failures }
}

#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    /// Per cluster vector: the reconstructed physical vector.
    pub reconstructed: Vec<Vec<f64>>,
    pub max_error: f64,
}

pub const EMBEDDING_TOLERANCE: f64 = 1e-9;

impl EmbeddingReport {
    pub fn is_ok(&self) -> bool {
        self.max_error <= EMBEDDING_TOLERANCE
    }
}

/// Maps `κ·π·εᵢ` back to physical space through the orthonormal basis
/// `v_a = ρ·(e₁[a], …, e_k[a])` of E and compares with `eᵢ`.
pub fn check_embedding(cluster: &ClusterSpec, p: &ProjectorSet) -> Result<EmbeddingReport, SchemeError> {
    let emb = cluster.embedding.as_ref().ok_or(SchemeError::MissingEmbedding)?;
    let (kappa, rho) = (p.kappa_f64(), p.rho_f64());
    let mut reconstructed = Vec::with_capacity(cluster.k);
    let mut max_error: f64 = 0.0;
    for i in 0..cluster.k {
        let y: Vec<f64> = p.pi.col(i).iter().map(|v| kappa * v.to_f64()).collect();
        let r: Vec<f64> = (0..cluster.n)
            .map(|a| rho * y.iter().zip(emb).map(|(yj, ej)| yj * ej[a]).sum::<f64>())
            .collect();
        for (x, e) in r.iter().zip(&emb[i]) {
            max_error = max_error.max((x - e).abs());
        }
        reconstructed.push(r);
    }
    Ok(EmbeddingReport { reconstructed, max_error })
}
