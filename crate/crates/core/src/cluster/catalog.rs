//! Built-in clusters: the decagon, the icosahedron, the dodecahedron,
//! the icosidodecahedron and two-shell icosahedral clusters.

use std::collections::VecDeque;

use super::{ClusterError, ClusterSpec, Relation, SignedPermutation};
use crate::goldfield::{GVec, GoldenScalar, Rational};
use crate::linalg::{dot, GoldenMatrix};

pub const CATALOG_NAMES: [&str; 5] = ["decagon", "icosahedron", "dodecahedron", "icosidodecahedron", "two_shell(1,1)"];

fn gs(s: &str) -> GoldenScalar {
    s.parse().expect("catalog constant")
}

fn vec3(v: [&str; 3]) -> GVec {
    v.iter().map(|s| gs(s)).collect()
}

fn perm(pairs: &[(usize, i8)]) -> SignedPermutation {
    SignedPermutation::from_pairs(pairs).expect("catalog permutation")
}

pub fn gram_of(vectors: &[GVec]) -> GoldenMatrix {
    GoldenMatrix::from_fn(vectors.len(), vectors.len(), |i, j| dot(&vectors[i], &vectors[j]))
}

fn float_rows(vectors: &[GVec]) -> Vec<Vec<f64>> {
    vectors.iter().map(|v| v.iter().map(GoldenScalar::to_f64).collect()).collect()
}

fn dihedral_relations() -> Vec<Relation> {
    vec![Relation::new("a", 10), Relation::new("b", 2), Relation::new("ab", 2)]
}

fn icosahedral_relations() -> Vec<Relation> {
    vec![Relation::new("a", 5), Relation::new("b", 2), Relation::new("ab", 3)]
}

/// The rotations `a` (order 5) and `b` (order 2) generating the icosahedral group in 3D.
pub fn icosahedral_rotations() -> [GoldenMatrix; 2] {
    // τ/2 = 1/4 + √5/4, (τ−1)/2 = −1/4 + √5/4.
    let t2 = "1/4+1/4*sqrt5";
    let t12 = "-1/4+1/4*sqrt5";
    let mt2 = "-1/4-1/4*sqrt5";
    let a = GoldenMatrix::from_rows(vec![
        vec![gs(t12), gs(mt2), gs("1/2")],
        vec![gs(t2), gs("1/2"), gs(t12)],
        vec![gs("-1/2"), gs(t12), gs(t2)],
    ])
    .expect("3x3");
    let b = GoldenMatrix::from_i64_rows(&[vec![-1, 0, 0], vec![0, -1, 0], vec![0, 0, 1]]).expect("3x3");
    [a, b]
}

/// Signed permutation induced by a linear map on the symmetric set `{±vᵢ}`.
pub fn signed_permutation_of(map: &GoldenMatrix, vectors: &[GVec]) -> Result<SignedPermutation, ClusterError> {
    let mut pairs = Vec::with_capacity(vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        let w = map.mul_vec(v).map_err(|e| ClusterError::Format(e.to_string()))?;
        let neg: GVec = w.iter().map(|x| -x).collect();
        let hit = vectors.iter().enumerate().find_map(|(i, u)| {
            if *u == w {
                Some((i, 1))
            } else if *u == neg {
                Some((i, -1))
            } else {
                None
            }
        });
        pairs.push(hit.ok_or(ClusterError::NotInvariant(j))?);
    }
    SignedPermutation::from_pairs(&pairs)
}

/// One representative of each `±` pair in the orbit of `seed`, in breadth-first order.
pub fn orbit_representatives(seed: &GVec, maps: &[GoldenMatrix], bound: usize) -> Result<Vec<GVec>, ClusterError> {
    let mut all: Vec<GVec> = vec![seed.clone()];
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(v) = queue.pop_front() {
        for m in maps {
            let w = m.mul_vec(&v).map_err(|e| ClusterError::Format(e.to_string()))?;
            if !all.contains(&w) {
                if all.len() >= bound {
                    return Err(ClusterError::ClosureBound(bound));
                }
                all.push(w.clone());
                queue.push_back(w);
            }
        }
    }
    let mut reps: Vec<GVec> = Vec::new();
    for v in all {
        let neg: GVec = v.iter().map(|x| -x).collect();
        if !reps.contains(&neg) {
            reps.push(v);
        }
    }
    Ok(reps)
}

pub fn decagon() -> ClusterSpec {
    let c1 = gs("-1/4+1/4*sqrt5");
    let c2 = gs("-1/4-1/4*sqrt5");
    let gram = GoldenMatrix::from_fn(5, 5, |i, j| match (i + 5 - j) % 5 {
        0 => GoldenScalar::from_int(1),
        1 | 4 => c1.clone(),
        _ => c2.clone(),
    });
    let embedding = (0..5)
        .map(|j| {
            let t = 2.0 * std::f64::consts::PI * j as f64 / 5.0;
            vec![t.cos(), t.sin()]
        })
        .collect();
    ClusterSpec {
        name: "decagon".into(),
        k: 5,
        n: 2,
        gram,
        generators: vec![
            perm(&[(3, -1), (4, -1), (0, -1), (1, -1), (2, -1)]),
            perm(&[(0, 1), (4, 1), (3, 1), (2, 1), (1, 1)]),
        ],
        embedding: Some(embedding),
        relations: dihedral_relations(),
    }
}

pub fn icosahedron_vectors() -> Vec<GVec> {
    let t = "1/2+1/2*sqrt5";
    let mt = "-1/2-1/2*sqrt5";
    vec![
        vec3(["1", t, "0"]),
        vec3(["-1", t, "0"]),
        vec3([mt, "0", "1"]),
        vec3(["0", "-1", t]),
        vec3([t, "0", "1"]),
        vec3(["0", "1", t]),
    ]
}

fn icosahedron_generators() -> Vec<SignedPermutation> {
    vec![
        perm(&[(1, 1), (2, 1), (3, 1), (4, 1), (0, 1), (5, 1)]),
        perm(&[(0, -1), (1, -1), (4, 1), (5, 1), (2, 1), (3, 1)]),
    ]
}

pub fn icosahedron() -> ClusterSpec {
    let v = icosahedron_vectors();
    ClusterSpec {
        name: "icosahedron".into(),
        k: 6,
        n: 3,
        gram: gram_of(&v),
        generators: icosahedron_generators(),
        embedding: Some(float_rows(&v)),
        relations: icosahedral_relations(),
    }
}

pub fn dodecahedron_vectors() -> Vec<GVec> {
    let t = "1/2+1/2*sqrt5";
    let mt = "-1/2-1/2*sqrt5";
    let t1 = "-1/2+1/2*sqrt5";
    let mt1 = "1/2-1/2*sqrt5";
    vec![
        vec3(["1", "1", "1"]),
        vec3(["0", t, t1]),
        vec3(["-1", "1", "1"]),
        vec3([mt1, "0", t]),
        vec3([t1, "0", t]),
        vec3(["1", "-1", "1"]),
        vec3([t, t1, "0"]),
        vec3(["0", t, mt1]),
        vec3([mt, t1, "0"]),
        vec3(["-1", "-1", "1"]),
    ]
}

fn dodecahedron_generators() -> Vec<SignedPermutation> {
    vec![
        perm(&[(1, 1), (2, 1), (3, 1), (4, 1), (0, 1), (6, 1), (7, 1), (8, 1), (9, 1), (5, 1)]),
        perm(&[(9, 1), (7, -1), (5, 1), (4, 1), (3, 1), (2, 1), (6, -1), (1, -1), (8, -1), (0, 1)]),
    ]
}

pub fn dodecahedron() -> ClusterSpec {
    let v = dodecahedron_vectors();
    ClusterSpec {
        name: "dodecahedron".into(),
        k: 10,
        n: 3,
        gram: gram_of(&v),
        generators: dodecahedron_generators(),
        embedding: Some(float_rows(&v)),
        relations: icosahedral_relations(),
    }
}

pub fn icosidodecahedron() -> ClusterSpec {
    let rots = icosahedral_rotations();
    let seed = vec3(["1", "0", "0"]);
    let v = orbit_representatives(&seed, &rots, 1000).expect("finite orbit");
    let generators = rots.iter().map(|r| signed_permutation_of(r, &v).expect("orbit is invariant")).collect();
    ClusterSpec {
        name: "icosidodecahedron".into(),
        k: v.len(),
        n: 3,
        gram: gram_of(&v),
        generators,
        embedding: Some(float_rows(&v)),
        relations: icosahedral_relations(),
    }
}

/// Union of the icosahedron scaled by `alpha` and the dodecahedron scaled by `beta`.
pub fn two_shell(alpha: &Rational, beta: &Rational) -> Result<ClusterSpec, ClusterError> {
    if alpha.signum() <= 0 || beta.signum() <= 0 {
        return Err(ClusterError::BadParameter(format!("two_shell({alpha},{beta}): factors must be positive")));
    }
    let scale = |vs: Vec<GVec>, f: &Rational| -> Vec<GVec> {
        vs.into_iter().map(|v| v.iter().map(|x| x.scale(f)).collect()).collect()
    };
    let mut v = scale(icosahedron_vectors(), alpha);
    v.extend(scale(dodecahedron_vectors(), beta));
    let ico = icosahedron_generators();
    let dod = dodecahedron_generators();
    let generators = ico
        .iter()
        .zip(&dod)
        .map(|(g, h)| {
            let mut images: Vec<usize> = g.images().to_vec();
            images.extend(h.images().iter().map(|i| i + 6));
            let mut signs = g.signs().to_vec();
            signs.extend_from_slice(h.signs());
            SignedPermutation::new(images, signs)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ClusterSpec {
        name: format!("two_shell({alpha},{beta})"),
        k: 16,
        n: 3,
        gram: gram_of(&v),
        generators,
        embedding: Some(float_rows(&v)),
        relations: icosahedral_relations(),
    })
}

/// Looks up a catalog entry by name; `two_shell(α,β)` takes positive rationals.
pub fn catalog(name: &str) -> Result<ClusterSpec, ClusterError> {
    let name = name.trim();
    match name {
        "decagon" => Ok(decagon()),
        "icosahedron" => Ok(icosahedron()),
        "dodecahedron" => Ok(dodecahedron()),
        "icosidodecahedron" => Ok(icosidodecahedron()),
        _ => {
            let args = name
                .strip_prefix("two_shell")
                .map(str::trim)
                .and_then(|s| s.strip_prefix('('))
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| ClusterError::UnknownCluster(name.to_string()))?;
            let parts: Vec<&str> = args.split(',').collect();
            if parts.len() != 2 {
                return Err(ClusterError::BadParameter(format!("{name}: expected two factors")));
            }
            let parse = |s: &str| -> Result<Rational, ClusterError> {
                let g: GoldenScalar =
                    s.parse().map_err(|_| ClusterError::BadParameter(format!("cannot parse factor {s:?}")))?;
                if !g.is_rational() {
                    return Err(ClusterError::BadParameter(format!("factor {s:?} is not rational")));
                }
                Ok(g.rational_part().clone())
            };
            two_shell(&parse(parts[0])?, &parse(parts[1])?)
        }
    }
}

impl ClusterSpec {
    /// One-dimensional cluster `{±1}` with the trivial group.
    pub fn trivial() -> ClusterSpec {
        ClusterSpec {
            name: "trivial".into(),
            k: 1,
            n: 1,
            gram: GoldenMatrix::identity(1),
            generators: vec![],
            embedding: Some(vec![vec![1.0]]),
            relations: vec![],
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::{close_group, DEFAULT_CLOSURE_BOUND};

    #[test]
    fn every_entry_validates() {
        for name in CATALOG_NAMES {
            let c = catalog(name).unwrap();
            let report = c.validate();
            assert!(report.is_ok(), "{name}: {:?}", report.issues);
        }
        assert!(ClusterSpec::trivial().validate().is_ok());
    }

    #[test]
    fn transcribed_generators_match_rotations() {
        let rots = icosahedral_rotations();
        for (vectors, gens) in [
            (icosahedron_vectors(), icosahedron_generators()),
            (dodecahedron_vectors(), dodecahedron_generators()),
        ] {
            for (r, g) in rots.iter().zip(&gens) {
                assert_eq!(&signed_permutation_of(r, &vectors).unwrap(), g);
            }
        }
    }

    #[test]
    fn group_orders() {
        let order = |c: ClusterSpec| close_group(c.k, &c.generators, DEFAULT_CLOSURE_BOUND).unwrap().order();
        assert_eq!(order(decagon()), 20);
        assert_eq!(order(icosahedron()), 60);
        assert_eq!(order(dodecahedron()), 60);
        assert_eq!(order(icosidodecahedron()), 60);
    }

    #[test]
    fn closure_preserves_gram() {
        for c in [decagon(), icosahedron(), dodecahedron()] {
            let g = close_group(c.k, &c.generators, DEFAULT_CLOSURE_BOUND).unwrap();
            for e in &g.elements {
                assert_eq!(e.gram_violation(&c.gram), None);
            }
        }
    }

    #[test]
    fn gram_entries() {
        let d = decagon();
        assert_eq!(d.gram.get(0, 1), &gs("-1/4+1/4*sqrt5"));
        let dd = dodecahedron();
        assert_eq!(dd.gram.get(0, 0), &gs("3"));
        assert_eq!(dd.gram.get(0, 1), &gs("sqrt5"));
        let ico = icosahedron();
        assert_eq!(ico.gram.get(0, 0), &gs("5/2+1/2*sqrt5"));
        let id = icosidodecahedron();
        assert_eq!(id.k, 15);
        assert!((0..15).all(|i| id.gram.get(i, i) == &gs("1")));
    }

    #[test]
    fn corrupted_gram_is_rejected() {
        let mut d = decagon();
        d.gram.set(0, 1, GoldenScalar::from_int(0));
        d.gram.set(1, 0, GoldenScalar::from_int(0));
        let r = d.validate();
        assert!(r.issues.iter().any(|i| matches!(i, super::super::ValidationIssue::GramNotPreserved { .. })));
    }

    #[test]
    fn two_shell_parsing() {
        let c = catalog("two_shell(1/2, 3)").unwrap();
        assert_eq!(c.k, 16);
        assert!(c.validate().is_ok());
        assert!(catalog("two_shell(sqrt5,1)").is_err());
        assert!(catalog("two_shell(-1,1)").is_err());
        assert!(catalog("tetrahedron").is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = dodecahedron();
        let s = serde_json::to_string(&c.to_json_value()).unwrap();
        let back = ClusterSpec::from_json_str(&s).unwrap();
        assert_eq!(back.gram, c.gram);
        assert_eq!(back.generators, c.generators);
        assert!(back.validate().is_ok());
    }
}
