//! Strongly solvable spherical subgroups: everything is determined by the
//! set Ψ of active roots and the restriction map `ι: 𝔛(T) → 𝔛(S)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::general::{Biweight, GeneralDatum, Origin, Xi3Prime};
use crate::intlin::{to_big, to_small, CharSpace, CharVec, IntLinError, IntMatrix};
use crate::rootsys::{supp, RootSystem, RootVec, WeightVec};

/// Indices of roots in errors are positions in Ψ, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolvableError {
    #[error("active root {index} ({root:?}) is not a positive root")]
    NotPositiveRoot { index: usize, root: Vec<i64> },
    #[error("active root {0} is listed twice")]
    DuplicateRoot(usize),
    #[error("{what}: expected dimension {expected}, got {found}")]
    Dimension {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error(
        "no simple root satisfies the decomposition property for active root {index} ({root:?})"
    )]
    NoCandidate { index: usize, root: Vec<i64> },
    #[error("several simple roots {candidates:?} satisfy the decomposition property for active root {index}")]
    NotUnique {
        index: usize,
        candidates: Vec<usize>,
    },
    #[error("π does not map F(β) bijectively onto Supp β for active root {index} ({root:?})")]
    BijectionFailure { index: usize, root: Vec<i64> },
    #[error(transparent)]
    IntLin(#[from] IntLinError),
}

#[derive(Debug, Clone)]
pub struct SolvableDatum {
    pub rs: RootSystem,
    pub active_roots: Vec<RootVec>,
    pub codomain: CharSpace,
    /// `codomain.dim() x rank`, column `i` is `ι(ϖ_i)`.
    pub iota: IntMatrix,
}

impl SolvableDatum {
    /// `S = T` with `ι` the identity on weight coordinates.
    pub fn with_identity(rs: RootSystem, active_roots: Vec<RootVec>) -> Self {
        let n = rs.rank();
        let names = (1..=n).map(|i| format!("ϖ{i}")).collect();
        Self {
            codomain: CharSpace::free(n).with_names(names).expect("rank names"),
            iota: IntMatrix::identity(n),
            active_roots,
            rs,
        }
    }

    pub fn validate(&self) -> Result<(), SolvableError> {
        let n = self.rs.rank();
        if self.iota.cols() != n || self.iota.rows() != self.codomain.dim() {
            return Err(SolvableError::Dimension {
                what: "iota".into(),
                expected: self.codomain.dim() * n,
                found: self.iota.rows() * self.iota.cols(),
            });
        }
        let mut seen = BTreeSet::new();
        for (k, r) in self.active_roots.iter().enumerate() {
            if r.0.len() != n || self.rs.root_index(&r.0).is_none() {
                return Err(SolvableError::NotPositiveRoot {
                    index: k + 1,
                    root: r.0.clone(),
                });
            }
            if !seen.insert(&r.0) {
                return Err(SolvableError::DuplicateRoot(k + 1));
            }
        }
        Ok(())
    }

    fn is_active(&self, r: &[i64]) -> bool {
        self.active_roots.iter().any(|a| a.0 == r)
    }

    /// `ι` applied to a weight, reduced in the codomain.
    pub fn restrict(&self, w: &WeightVec) -> Result<CharVec, SolvableError> {
        let v = to_small(&self.iota.mul_vec(&to_big(&w.0)))?;
        Ok(self.codomain.vec(v)?)
    }
}

fn support(r: &RootVec) -> BTreeSet<usize> {
    supp(r).expect("positive root")
}

/// Ordered decompositions `β = γ + η` into positive roots.
fn decompositions(rs: &RootSystem, beta: &RootVec) -> Vec<(RootVec, RootVec)> {
    rs.pos_roots()
        .iter()
        .filter_map(|g| {
            let eta: Vec<i64> = beta.0.iter().zip(&g.0).map(|(b, x)| b - x).collect();
            rs.root_index(&eta).map(|_| (g.clone(), RootVec(eta)))
        })
        .collect()
}

/// For each active root, the unique simple root `π(β) ∈ Supp β` such that
/// for every decomposition `β = γ + η` into positive roots, `γ` is active
/// exactly when `π(β) ∉ Supp γ` (and likewise for `η`).
pub fn pi_map(d: &SolvableDatum) -> Result<Vec<usize>, SolvableError> {
    d.validate()?;
    d.active_roots
        .iter()
        .enumerate()
        .map(|(k, beta)| {
            let decs = decompositions(&d.rs, beta);
            let candidates: Vec<usize> = support(beta)
                .into_iter()
                .filter(|&delta| {
                    decs.iter().all(|(g, e)| {
                        (d.is_active(&g.0) == !support(g).contains(&delta))
                            && (d.is_active(&e.0) == !support(e).contains(&delta))
                    })
                })
                .collect();
            match candidates.as_slice() {
                [one] => Ok(*one),
                [] => Err(SolvableError::NoCandidate {
                    index: k + 1,
                    root: beta.0.clone(),
                }),
                _ => Err(SolvableError::NotUnique {
                    index: k + 1,
                    candidates: candidates.iter().map(|c| c + 1).collect(),
                }),
            }
        })
        .collect()
}

/// `F(β) = {β} ∪ {γ ∈ Ψ : β − γ ∈ Δ⁺}` as positions in Ψ.
pub fn f_set(d: &SolvableDatum, beta_index: usize) -> Vec<usize> {
    let beta = &d.active_roots[beta_index];
    d.active_roots
        .iter()
        .enumerate()
        .filter(|(k, g)| {
            if *k == beta_index {
                return true;
            }
            let diff: Vec<i64> = beta.0.iter().zip(&g.0).map(|(b, x)| b - x).collect();
            d.rs.root_index(&diff).is_some()
        })
        .map(|(k, _)| k)
        .collect()
}

/// Checks that π maps every `F(β)` bijectively onto `Supp β`.
pub fn validate_pi(d: &SolvableDatum, pi: &[usize]) -> Result<(), SolvableError> {
    for (k, beta) in d.active_roots.iter().enumerate() {
        let f = f_set(d, k);
        let images: BTreeSet<usize> = f.iter().map(|&g| pi[g]).collect();
        if images.len() != f.len() || images != support(beta) {
            return Err(SolvableError::BijectionFailure {
                index: k + 1,
                root: beta.0.clone(),
            });
        }
    }
    Ok(())
}

/// The simple spherical roots: the union of the supports of the active roots.
pub fn solvable_sigma(d: &SolvableDatum) -> BTreeSet<usize> {
    d.active_roots.iter().flat_map(support).collect()
}

#[derive(Debug, Clone)]
pub struct SolvableResult {
    pub pi_map: Vec<usize>,
    /// Distinct restrictions `ι(α)`, `α ∈ Ψ`, in first-occurrence order.
    pub phi: Vec<CharVec>,
    /// Positions in Ψ restricting to each element of Φ.
    pub fibers: Vec<Vec<usize>>,
    pub lambda_phi: Vec<WeightVec>,
    pub generators: Vec<Biweight>,
    pub sigma: BTreeSet<usize>,
}

pub fn solvable_monoid(d: &SolvableDatum) -> Result<SolvableResult, SolvableError> {
    let pi = pi_map(d)?;
    validate_pi(d, &pi)?;
    let n = d.rs.rank();

    let mut phi: Vec<CharVec> = Vec::new();
    let mut fibers: Vec<Vec<usize>> = Vec::new();
    for (k, a) in d.active_roots.iter().enumerate() {
        let r = d.restrict(&d.rs.root_to_weight(a))?;
        match phi.iter().position(|p| d.codomain.equivalent(p, &r)) {
            Some(j) => fibers[j].push(k),
            None => {
                phi.push(r);
                fibers.push(vec![k]);
            }
        }
    }

    let mut generators: Vec<Biweight> = (0..n)
        .map(|a| {
            let w = d.rs.fundamental_weight(a);
            let chi = d.codomain.neg(&d.restrict(&w)?);
            Ok(Biweight {
                lambda: w,
                chi,
                origin: Origin::Xi1,
            })
        })
        .collect::<Result<_, SolvableError>>()?;

    let mut lambda_phi = Vec::new();
    for (p, fiber) in phi.iter().zip(&fibers) {
        let simple: BTreeSet<usize> = fiber.iter().map(|&k| pi[k]).collect();
        let mut lam = WeightVec::zero(n);
        for a in simple {
            lam.0[a] = 1;
        }
        let chi = d.codomain.add(&d.codomain.neg(&d.restrict(&lam)?), p);
        generators.push(Biweight {
            lambda: lam.clone(),
            chi,
            origin: Origin::Xi3,
        });
        lambda_phi.push(lam);
    }

    Ok(SolvableResult {
        pi_map: pi,
        phi,
        fibers,
        lambda_phi,
        generators,
        sigma: solvable_sigma(d),
    })
}

/// Encodes the solvable datum for the general pipeline: no Levi part,
/// `𝔛(K) = 𝔛(S)`, `Ξ′₃ = Φ` with each φ lifted by an active root in its
/// fiber, and the simple spherical roots from [`solvable_sigma`].
pub fn to_general(d: &SolvableDatum, res: &SolvableResult) -> Result<GeneralDatum, SolvableError> {
    let n = d.rs.rank();
    let omega_bar = (0..n)
        .map(|a| Ok((a, d.restrict(&d.rs.fundamental_weight(a))?)))
        .collect::<Result<BTreeMap<_, _>, SolvableError>>()?;
    let xi3_prime = res
        .phi
        .iter()
        .zip(&res.fibers)
        .map(|(p, fiber)| Xi3Prime {
            mu: p.clone(),
            mu_lift: Some(d.rs.root_to_weight(&d.active_roots[fiber[0]])),
        })
        .collect();
    Ok(GeneralDatum {
        rs: d.rs.clone(),
        pi_l: BTreeSet::new(),
        char_space_k: d.codomain.clone(),
        omega_bar,
        codomain: d.codomain.clone(),
        iota: d.iota.clone(),
        xi2_prime: Vec::new(),
        xi3_prime,
        sigma_simple: res.sigma.clone(),
        unique_expected: true,
        lie: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2(active: Vec<Vec<i64>>) -> SolvableDatum {
        SolvableDatum::with_identity(
            RootSystem::from_type("A2").unwrap(),
            active.into_iter().map(RootVec).collect(),
        )
    }

    #[test]
    fn simple_active_root_maps_to_itself() {
        let d = a2(vec![vec![0, 1]]);
        assert_eq!(pi_map(&d).unwrap(), vec![1]);
        assert_eq!(f_set(&d, 0), vec![0]);
    }

    #[test]
    fn empty_psi_gives_borel_generators_only() {
        let d = a2(vec![]);
        let r = solvable_monoid(&d).unwrap();
        assert!(r.phi.is_empty());
        assert_eq!(r.generators.len(), 2);
        assert!(r.sigma.is_empty());
    }

    #[test]
    fn non_root_rejected() {
        let d = a2(vec![vec![2, 1]]);
        assert!(matches!(
            pi_map(&d),
            Err(SolvableError::NotPositiveRoot { index: 1, .. })
        ));
    }

    #[test]
    fn lone_sum_root_has_no_pi() {
        // α1+α2 active with neither simple root active: every candidate fails.
        let d = a2(vec![vec![1, 1]]);
        assert!(matches!(pi_map(&d), Err(SolvableError::NoCandidate { .. })));
    }
}
