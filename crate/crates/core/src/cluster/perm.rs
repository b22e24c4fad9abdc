use std::collections::{HashSet, VecDeque};

use num_traits::Zero;

use super::ClusterError;
use crate::goldfield::GoldenScalar;
use crate::linalg::GoldenMatrix;

/// Signed permutation of coordinates: position `j` is sent to `images[j]`
/// with sign `signs[j]`, i.e. `(g·x)[g(j)] = s_j · x[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(images: Vec<usize>, signs: Vec<i8>) -> Result<Self, ClusterError> {
        let k = images.len();
        if signs.len() != k {
            return Err(ClusterError::BadPermutation(format!(
                "{} images but {} signs",
                k,
                signs.len()
            )));
        }
        let mut seen = vec![false; k];
        for &i in &images {
            if i >= k || seen[i] {
                return Err(ClusterError::BadPermutation(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        if let Some(s) = signs.iter().find(|s| s.abs() != 1) {
            return Err(ClusterError::BadPermutation(format!("sign {s} is not ±1")));
        }
        Ok(SignedPermutation { images, signs })
    }

    /// From 0-based `(image, sign)` pairs.
    pub fn from_pairs(pairs: &[(usize, i8)]) -> Result<Self, ClusterError> {
        Self::new(pairs.iter().map(|p| p.0).collect(), pairs.iter().map(|p| p.1).collect())
    }

    pub fn identity(k: usize) -> Self {
        SignedPermutation { images: (0..k).collect(), signs: vec![1; k] }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &i)| i == j) && self.signs.iter().all(|&s| s == 1)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.size(), other.size(), "composing permutations of different sizes");
        let images = other.images.iter().map(|&h| self.images[h]).collect();
        let signs = other.images.iter().zip(&other.signs).map(|(&h, &s)| s * self.signs[h]).collect();
        SignedPermutation { images, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let k = self.size();
        let mut images = vec![0; k];
        let mut signs = vec![1; k];
        for j in 0..k {
            images[self.images[j]] = j;
            signs[self.images[j]] = self.signs[j];
        }
        SignedPermutation { images, signs }
    }

    pub fn pow(&self, e: u32) -> SignedPermutation {
        (0..e).fold(Self::identity(self.size()), |acc, _| acc.compose(self))
    }

    pub fn order(&self) -> u32 {
        let mut g = self.clone();
        let mut n = 1;
        while !g.is_identity() {
            g = g.compose(self);
            n += 1;
        }
        n
    }

    pub fn apply_int(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; x.len()];
        for j in 0..x.len() {
            out[self.images[j]] = self.signs[j] as i64 * x[j];
        }
        out
    }

    pub fn apply(&self, x: &[GoldenScalar]) -> Vec<GoldenScalar> {
        let mut out = vec![GoldenScalar::zero(); x.len()];
        for j in 0..x.len() {
            out[self.images[j]] = if self.signs[j] < 0 { -&x[j] } else { x[j].clone() };
        }
        out
    }

    /// Matrix with `P[g(j)][j] = s_j`.
    pub fn matrix(&self) -> GoldenMatrix {
        let k = self.size();
        let mut m = GoldenMatrix::zeros(k, k);
        for j in 0..k {
            m.set(self.images[j], j, GoldenScalar::from_int(self.signs[j] as i64));
        }
        m
    }

    /// Whether `gram[g(i)][g(j)]·sᵢsⱼ = gram[i][j]` for all i, j; returns the first failure.
    pub fn gram_violation(&self, gram: &GoldenMatrix) -> Option<(usize, usize)> {
        let k = self.size();
        for i in 0..k {
            for j in 0..k {
                let v = gram.get(self.images[i], self.images[j]);
                let v = if self.signs[i] * self.signs[j] < 0 { -v } else { v.clone() };
                if &v != gram.get(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// All elements of a finite signed-permutation group.
#[derive(Debug, Clone)]
pub struct GroupClosure {
    pub elements: Vec<SignedPermutation>,
}

impl GroupClosure {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

/// Breadth-first closure under right multiplication by the generators.
pub fn close_group(k: usize, generators: &[SignedPermutation], bound: usize) -> Result<GroupClosure, ClusterError> {
    if let Some(g) = generators.iter().find(|g| g.size() != k) {
        return Err(ClusterError::BadPermutation(format!("generator of size {} in dimension {k}", g.size())));
    }
    let id = SignedPermutation::identity(k);
    let mut seen = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                if seen.len() > bound {
                    return Err(ClusterError::ClosureBound(bound));
                }
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(GroupClosure { elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(k: usize) -> impl Strategy<Value = SignedPermutation> {
        (Just((0..k).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], k))
            .prop_map(|(i, s)| SignedPermutation::new(i, s).unwrap())
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SignedPermutation::new(vec![0, 0], vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![1, 0], vec![1, 2]).is_err());
    }

    #[test]
    fn identity_closure() {
        assert_eq!(close_group(3, &[], 10).unwrap().order(), 1);
        let swap = SignedPermutation::from_pairs(&[(1, 1), (0, -1)]).unwrap();
        assert_eq!(swap.order(), 4);
        assert!(matches!(close_group(2, &[swap], 2), Err(ClusterError::ClosureBound(2))));
    }

    proptest! {
        #[test]
        fn matrix_is_a_homomorphism(g in perm(5), h in perm(5)) {
            prop_assert_eq!(g.compose(&h).matrix(), &g.matrix() * &h.matrix());
            prop_assert!(g.compose(&g.inverse()).is_identity());
            let x = vec![3i64, -1, 4, 1, -5];
            let gx: Vec<GoldenScalar> = g.apply_int(&x).into_iter().map(GoldenScalar::from_int).collect();
            prop_assert_eq!(g.matrix().mul_int_vec(&x), gx);
        }
    }
}
