use serde::{Deserialize, Serialize};

use super::{ClusterError, SignedPermutation};
use crate::goldfield::GoldenScalar;
use crate::linalg::{rank, GoldenMatrix};

/// Presentation relation `(w₁w₂…)^power = e` over generator letters `a, b, …`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub word: String,
    pub power: u32,
}

impl Relation {
    pub fn new(word: &str, power: u32) -> Self {
        Relation { word: word.to_string(), power }
    }

    pub fn evaluate(&self, gens: &[SignedPermutation], k: usize) -> Result<SignedPermutation, ClusterError> {
        let mut w = SignedPermutation::identity(k);
        for ch in self.word.chars() {
            let idx = (ch as usize).wrapping_sub('a' as usize);
            let g = gens.get(idx).ok_or_else(|| ClusterError::BadRelation(self.word.clone()))?;
            w = w.compose(g);
        }
        Ok(w.pow(self.power))
    }
}

/// A symmetric cluster `{±e₁,…,±e_k}` described by its Gram matrix and a
/// signed-permutation action of its symmetry group.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterSpec {
    pub name: String,
    pub k: usize,
    pub n: usize,
    pub gram: GoldenMatrix,
    pub generators: Vec<SignedPermutation>,
    /// Rows are floating coordinates of `eᵢ`; rendering and sanity checks only.
    pub embedding: Option<Vec<Vec<f64>>>,
    pub relations: Vec<Relation>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ValidationIssue {
    GramShape { rows: usize, cols: usize },
    NotSymmetric { i: usize, j: usize },
    NonPositiveDiagonal { i: usize },
    GramRank { expected: usize, found: usize },
    GeneratorSize { generator: usize, size: usize },
    GramNotPreserved { generator: usize, i: usize, j: usize },
    RelationFails { relation: String },
    EmbeddingShape,
    EmbeddingMismatch { i: usize, j: usize, error: f64 },
}

impl std::fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ValidationIssue::GramShape { rows, cols } => write!(f, "gram is {rows}x{cols}"),
            ValidationIssue::NotSymmetric { i, j } => write!(f, "gram[{i}][{j}] != gram[{j}][{i}]"),
            ValidationIssue::NonPositiveDiagonal { i } => write!(f, "gram[{i}][{i}] is not positive"),
            ValidationIssue::GramRank { expected, found } => write!(f, "gram rank {found}, expected {expected}"),
            ValidationIssue::GeneratorSize { generator, size } => {
                write!(f, "generator {generator} acts on {size} coordinates")
            }
            ValidationIssue::GramNotPreserved { generator, i, j } => {
                write!(f, "generator {generator} does not preserve gram at ({i}, {j})")
            }
            ValidationIssue::RelationFails { relation } => write!(f, "relation {relation} does not hold"),
            ValidationIssue::EmbeddingShape => write!(f, "embedding has the wrong shape"),
            ValidationIssue::EmbeddingMismatch { i, j, error } => {
                write!(f, "embedding inner product ({i}, {j}) off by {error:e}")
            }
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }
}

impl ClusterSpec {
    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        let k = self.k;
        if self.gram.shape() != (k, k) {
            issues.push(ValidationIssue::GramShape { rows: self.gram.rows(), cols: self.gram.cols() });
            return ValidationReport { issues };
        }
        for i in 0..k {
            if self.gram.get(i, i).signum() <= 0 {
                issues.push(ValidationIssue::NonPositiveDiagonal { i });
            }
            for j in 0..i {
                if self.gram.get(i, j) != self.gram.get(j, i) {
                    issues.push(ValidationIssue::NotSymmetric { i, j });
                }
            }
        }
        let r = rank(&self.gram);
        if r != self.n {
            issues.push(ValidationIssue::GramRank { expected: self.n, found: r });
        }
        let mut sizes_ok = true;
        for (gi, g) in self.generators.iter().enumerate() {
            if g.size() != k {
                issues.push(ValidationIssue::GeneratorSize { generator: gi, size: g.size() });
                sizes_ok = false;
            } else if let Some((i, j)) = g.gram_violation(&self.gram) {
                issues.push(ValidationIssue::GramNotPreserved { generator: gi, i, j });
            }
        }
        if sizes_ok {
            for rel in &self.relations {
                let holds = rel.evaluate(&self.generators, k).map(|w| w.is_identity()).unwrap_or(false);
                if !holds {
                    issues.push(ValidationIssue::RelationFails { relation: format!("({})^{}", rel.word, rel.power) });
                }
            }
        }
        if let Some(emb) = &self.embedding {
            if emb.len() != k || emb.iter().any(|r| r.len() != self.n) {
                issues.push(ValidationIssue::EmbeddingShape);
            } else {
                for i in 0..k {
                    for j in 0..=i {
                        let d: f64 = emb[i].iter().zip(&emb[j]).map(|(a, b)| a * b).sum();
                        let err = (d - self.gram.get(i, j).to_f64()).abs();
                        if err > 1e-12 * (1.0 + d.abs()) {
                            issues.push(ValidationIssue::EmbeddingMismatch { i, j, error: err });
                        }
                    }
                }
            }
        }
        ValidationReport { issues }
    }

    /// Squared length of the first cluster vector: the edge unit of patterns.
    pub fn edge_sq(&self) -> &GoldenScalar {
        self.gram.get(0, 0)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(ClusterFile::from(self)).expect("cluster serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self, ClusterError> {
        let file: ClusterFile = serde_json::from_str(s).map_err(|e| ClusterError::Format(e.to_string()))?;
        file.try_into()
    }
}

/// On-disk cluster definition. Permutations are 1-based.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClusterFile {
    pub name: String,
    pub k: usize,
    pub n: usize,
    pub gram: GoldenMatrix,
    pub generators: Vec<GeneratorFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<Relation>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorFile {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl From<&ClusterSpec> for ClusterFile {
    fn from(c: &ClusterSpec) -> Self {
        ClusterFile {
            name: c.name.clone(),
            k: c.k,
            n: c.n,
            gram: c.gram.clone(),
            generators: c
                .generators
                .iter()
                .map(|g| GeneratorFile { perm: g.images().iter().map(|i| i + 1).collect(), signs: g.signs().to_vec() })
                .collect(),
            embedding: c.embedding.as_ref().map(|e| {
                e.iter().map(|r| r.iter().map(|&v| crate::round_sig(v)).collect()).collect()
            }),
            relations: c.relations.clone(),
        }
    }
}

impl TryFrom<ClusterFile> for ClusterSpec {
    type Error = ClusterError;
    fn try_from(f: ClusterFile) -> Result<Self, ClusterError> {
        let generators = f
            .generators
            .into_iter()
            .map(|g| {
                if g.perm.contains(&0) {
                    return Err(ClusterError::Format("permutations are 1-based".into()));
                }
                SignedPermutation::new(g.perm.iter().map(|i| i - 1).collect(), g.signs)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ClusterSpec {
            name: f.name,
            k: f.k,
            n: f.n,
            gram: f.gram,
            generators,
            embedding: f.embedding,
            relations: f.relations,
        })
    }
}
