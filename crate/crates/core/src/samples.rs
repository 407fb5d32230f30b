//! Worked data sets used by tests, benchmarks and the documentation.
//!
//! Indices are 0-based here; the committed JSON fixtures use 1-based ones.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::chevalley::{AlgVec, ChevalleyAlgebra};
use crate::general::{GeneralDatum, LieData, Xi2Prime, Xi3Prime};
use crate::intlin::{CharSpace, IntMatrix};
use crate::rootsys::{RootSystem, RootVec, WeightVec};
use crate::solvable::SolvableDatum;

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// `Σ c e_β` over signed root coordinates.
fn lie_vec(alg: &ChevalleyAlgebra, terms: &[(&[i64], i64)]) -> AlgVec {
    AlgVec::from_terms(terms.iter().map(|(r, c)| {
        let id = alg.root_id(r).expect("sample root");
        (id, BigRational::from_integer(BigInt::from(*c)))
    }))
}

/// `SL6` with `H` the stabilizer data of a symmetric 3x3 block:
/// `Π_L = {α1, α2, α4, α5}`, `𝔛(K) = ℤχ`.
pub fn sl6() -> GeneralDatum {
    let rs = RootSystem::from_type("A5").expect("A5");
    let chi = CharSpace::free(1).with_names(names(&["χ"])).unwrap();
    let codomain = CharSpace::free(3)
        .with_names(names(&["ε1", "ε2", "ε3"]))
        .unwrap();
    let alg = ChevalleyAlgebra::new(rs.clone());
    let h_u = vec![
        lie_vec(&alg, &[(&[-1, -1, -1, 0, 0], 1)]),
        lie_vec(&alg, &[(&[0, -1, -1, -1, 0], 1)]),
        lie_vec(&alg, &[(&[0, 0, -1, -1, -1], 1)]),
        lie_vec(&alg, &[(&[0, -1, -1, 0, 0], 1), (&[-1, -1, -1, -1, 0], 1)]),
        lie_vec(&alg, &[(&[0, 0, -1, 0, 0], 1), (&[-1, -1, -1, -1, -1], 1)]),
        lie_vec(&alg, &[(&[0, 0, -1, -1, 0], 1), (&[0, -1, -1, -1, -1], 1)]),
    ];
    GeneralDatum {
        pi_l: BTreeSet::from([0, 1, 3, 4]),
        omega_bar: BTreeMap::from([(2, chi.vec(vec![1]).unwrap())]),
        iota: IntMatrix::from_rows(&[
            vec![1, 1, 1, 0, 0],
            vec![0, 1, 1, 1, 0],
            vec![0, 0, 1, 1, 1],
        ]),
        xi2_prime: vec![
            Xi2Prime {
                lambda_l: BTreeMap::from([(0, 1), (3, 1)]),
                chi_tilde: chi.vec(vec![-1]).unwrap(),
            },
            Xi2Prime {
                lambda_l: BTreeMap::from([(1, 1), (4, 1)]),
                chi_tilde: chi.vec(vec![-1]).unwrap(),
            },
        ],
        xi3_prime: vec![
            Xi3Prime {
                mu: codomain.vec(vec![1, 1, 0]).unwrap(),
                mu_lift: Some(WeightVec(vec![0, 1, 0, 0, 0])),
            },
            Xi3Prime {
                mu: codomain.vec(vec![1, 0, 1]).unwrap(),
                mu_lift: Some(WeightVec(vec![1, 0, 0, 0, 1])),
            },
            Xi3Prime {
                mu: codomain.vec(vec![0, 1, 1]).unwrap(),
                mu_lift: Some(WeightVec(vec![0, 0, 0, 1, 0])),
            },
        ],
        sigma_simple: (0..5).collect(),
        unique_expected: true,
        lie: Some(LieData {
            h_u,
            s_commutator: Vec::new(),
        }),
        char_space_k: chi,
        codomain,
        rs,
    }
}

/// `Spin7` with `K ≅ GL2`, `Π_L = {α2}`, and a `ℤ/2` factor in the
/// restriction target.
pub fn so7() -> GeneralDatum {
    let rs = RootSystem::from_type("B3").expect("B3");
    // 𝔛(K̃) is generated by ψ1, ψ3 subject to 2ψ1 = 2ψ3.
    let k = CharSpace::free(2)
        .with_names(names(&["ψ1", "ψ3"]))
        .unwrap()
        .with_relations(vec![vec![2, -2]])
        .unwrap();
    let codomain = CharSpace::new(2, vec![2]).unwrap();
    let alg = ChevalleyAlgebra::new(rs.clone());
    let h_u = vec![
        lie_vec(&alg, &[(&[-1, 0, 0], 1), (&[0, 0, -1], 1)]),
        lie_vec(&alg, &[(&[-1, -1, 0], 1), (&[0, -1, -1], 1)]),
        lie_vec(&alg, &[(&[-1, -1, -1], 1), (&[0, -1, -2], 1)]),
        lie_vec(&alg, &[(&[-1, -1, -2], 1)]),
        lie_vec(&alg, &[(&[-1, -2, -2], 1)]),
    ];
    let h2 = alg.h(1).unwrap();
    let s_commutator = vec![
        lie_vec(&alg, &[(&[0, 1, 0], 1)]),
        lie_vec(&alg, &[(&[0, -1, 0], 1)]),
        h2,
    ];
    GeneralDatum {
        pi_l: BTreeSet::from([1]),
        omega_bar: BTreeMap::from([
            (0, k.vec(vec![1, 0]).unwrap()),
            (2, k.vec(vec![0, 1]).unwrap()),
        ]),
        iota: IntMatrix::from_rows(&[vec![1, 2, 1], vec![1, 1, 1], vec![0, 0, 1]]),
        xi2_prime: Vec::new(),
        xi3_prime: vec![
            Xi3Prime {
                mu: codomain.vec(vec![1, 0, 0]).unwrap(),
                mu_lift: Some(rs.root_to_weight(&RootVec(vec![1, 1, 0]))),
            },
            Xi3Prime {
                mu: codomain.vec(vec![1, 1, 0]).unwrap(),
                mu_lift: Some(rs.root_to_weight(&RootVec(vec![1, 1, 1]))),
            },
        ],
        sigma_simple: BTreeSet::from([2]),
        unique_expected: true,
        lie: Some(LieData { h_u, s_commutator }),
        char_space_k: k,
        codomain,
        rs,
    }
}

/// `SL3` with `H` regularly embedded in the parabolic with `Π_L = {α1}`;
/// `K = T` lies in a proper parabolic of `L`, so Ξ₃ is not determined.
pub fn sl3_parabolic() -> GeneralDatum {
    let rs = RootSystem::from_type("A2").expect("A2");
    let k = CharSpace::free(2).with_names(names(&["ϖ1", "ϖ2"])).unwrap();
    let codomain = CharSpace::free(1).with_names(names(&["c"])).unwrap();
    let alg = ChevalleyAlgebra::new(rs.clone());
    GeneralDatum {
        pi_l: BTreeSet::from([0]),
        omega_bar: BTreeMap::from([(1, k.vec(vec![0, 1]).unwrap())]),
        iota: IntMatrix::from_rows(&[vec![1, 2]]),
        xi2_prime: vec![
            Xi2Prime {
                lambda_l: BTreeMap::from([(0, 1)]),
                chi_tilde: k.vec(vec![-1, 0]).unwrap(),
            },
            Xi2Prime {
                lambda_l: BTreeMap::from([(0, 1)]),
                chi_tilde: k.vec(vec![1, -1]).unwrap(),
            },
        ],
        xi3_prime: vec![Xi3Prime {
            mu: codomain.vec(vec![3]).unwrap(),
            mu_lift: Some(rs.root_to_weight(&RootVec(vec![0, 1]))),
        }],
        sigma_simple: BTreeSet::from([0, 1]),
        unique_expected: false,
        lie: Some(LieData {
            h_u: vec![lie_vec(&alg, &[(&[0, -1], 1), (&[-1, -1], -1)])],
            s_commutator: Vec::new(),
        }),
        char_space_k: k,
        codomain,
        rs,
    }
}

/// Strongly solvable subgroup of `SL3` with active roots `α1, α1+α2` and
/// `S = T`.
pub fn sl3_solvable() -> SolvableDatum {
    let rs = RootSystem::from_type("A2").expect("A2");
    SolvableDatum::with_identity(rs, vec![RootVec(vec![1, 0]), RootVec(vec![1, 1])])
}

/// Strongly solvable subgroup of `SL6` with active roots
/// `α3, α2+α3, α3+α4` and `S = T`.
pub fn n0_solvable() -> SolvableDatum {
    let rs = RootSystem::from_type("A5").expect("A5");
    SolvableDatum::with_identity(
        rs,
        vec![
            RootVec(vec![0, 0, 1, 0, 0]),
            RootVec(vec![0, 1, 1, 0, 0]),
            RootVec(vec![0, 0, 1, 1, 0]),
        ],
    )
}

/// Deterministic family of parabolically induced data (`Ξ′₃ = ∅`) over a
/// spread of Cartan types and Levi subsets.
///
/// `𝔛(K)` is free with one coordinate per `α ∈ Π ∖ Π_L` followed by one per
/// `Ξ′₂` element; the restriction target is trivial.
pub fn parabolic_induction(count: usize) -> Vec<GeneralDatum> {
    const TYPES: [&str; 10] = [
        "A2", "A3", "A4", "B3", "C3", "D4", "G2", "F4", "A5", "B2xA2",
    ];
    (0..count)
        .map(|k| {
            let rs = RootSystem::from_type(TYPES[k % TYPES.len()]).expect("sample type");
            let n = rs.rank();
            // Vary Π_L through the bit patterns of a step that is coprime to
            // small powers of two.
            let mask = (k * 7 + 3) % (1 << n);
            let pi_l: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let outside: Vec<usize> = (0..n).filter(|i| !pi_l.contains(i)).collect();
            let levi: Vec<usize> = pi_l.iter().copied().collect();
            let mut lambdas: Vec<BTreeMap<usize, i64>> = Vec::new();
            if let Some(&a) = levi.first() {
                lambdas.push(BTreeMap::from([(a, 1)]));
            }
            if levi.len() >= 2 && k % 2 == 0 {
                lambdas.push(BTreeMap::from([(levi[0], 1), (levi[levi.len() - 1], 1)]));
            }
            let dim = outside.len() + lambdas.len();
            let k_space = CharSpace::free(dim);
            let omega_bar = outside
                .iter()
                .enumerate()
                .map(|(j, &a)| (a, k_space.basis(j)))
                .collect();
            let xi2_prime = lambdas
                .into_iter()
                .enumerate()
                .map(|(j, lambda_l)| Xi2Prime {
                    lambda_l,
                    chi_tilde: k_space.basis(outside.len() + j),
                })
                .collect();
            GeneralDatum {
                pi_l,
                omega_bar,
                iota: IntMatrix::zeros(0, n),
                xi2_prime,
                xi3_prime: Vec::new(),
                sigma_simple: BTreeSet::new(),
                unique_expected: true,
                lie: None,
                char_space_k: k_space,
                codomain: CharSpace::free(0),
                rs,
            }
        })
        .collect()
}
