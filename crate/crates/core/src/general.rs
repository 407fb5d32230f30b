//! Generators of the extended weight monoid from a regular embedding
//! `H ⊂ P`: the three families Ξ₁ (from `G/P`), Ξ₂ (from the Levi quotient)
//! and Ξ₃ (from the spherical module `𝔭_u/𝔥_u`).

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde_json::json;

use crate::chevalley::{AlgVec, ChevalleyAlgebra, ChevalleyError};
use crate::diag::{codes, Diagnostic, Severity};
use crate::intlin::{
    hermite_rows, in_sublattice, in_sublattice_mod, kernel_mod, solve_mod, to_big, to_small,
    CharSpace, CharVec, IntLinError, IntMatrix, Solution,
};
use crate::rootsys::{is_dominant, wsupp, RootSystem, WeightVec};

/// Simple-root and list indices carried by these errors are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneralError {
    #[error("no restriction ϖ̄ given for simple root {0}")]
    MissingOmegaBar(usize),
    #[error("restriction ϖ̄ given for simple root {0}, which lies in the Levi part")]
    UnexpectedOmegaBar(usize),
    #[error("{what}: expected dimension {expected}, got {found}")]
    Dimension {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("{what}: index {index} out of range")]
    IndexOutOfRange { what: String, index: usize },
    #[error("Levi weight {index} is supported at simple root {root} outside the Levi part")]
    SupportOutsidePiL { index: usize, root: usize },
    #[error("Ξ₂ weight {index} meets the Ξ₁ support at simple root {root}")]
    SupportClash { index: usize, root: usize },
    #[error("μ{0} is not in the image of the restriction map")]
    NoLift(usize),
    #[error("supplied lift of μ{0} does not restrict to μ{0}")]
    BadLift(usize),
    #[error("simple root {0} is not in the weight lattice")]
    AlphaNotInLambda(usize),
    #[error("the μ do not determine a unique expression of simple root {0}")]
    NoExpression(usize),
    #[error("the system for μ{0} has no integer solution")]
    Inconsistent(usize),
    #[error("the system for μ{0} is not uniquely solvable although uniqueness was expected")]
    UniquenessViolated(usize),
    #[error("the weight attached to μ{index} is not dominant: {lambda:?}")]
    NotDominant { index: usize, lambda: Vec<i64> },
    #[error("Ξ₃ weight for μ{index} has the wrong coefficient at simple root {alpha}")]
    DeltaMismatch { index: usize, alpha: usize },
    #[error("simple root {alpha} is declared spherical but {reason}")]
    SigmaInconsistent { alpha: usize, reason: String },
    #[error("simple root {alpha} is not declared spherical but {reason}")]
    SigmaMissing { alpha: usize, reason: String },
    #[error("rank identity fails: expected {expected} generators, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("generators {0} and {1} coincide")]
    DuplicateGenerators(usize, usize),
    #[error(transparent)]
    Lie(#[from] ChevalleyError),
    #[error(transparent)]
    IntLin(#[from] IntLinError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Origin {
    Xi1,
    Xi2,
    Xi3,
}

impl Origin {
    pub fn as_str(self) -> &'static str {
        match self {
            Origin::Xi1 => "xi1",
            Origin::Xi2 => "xi2",
            Origin::Xi3 => "xi3",
        }
    }
}

/// A pair `(λ, χ)` of a dominant weight and a character of `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Biweight {
    pub lambda: WeightVec,
    pub chi: CharVec,
    pub origin: Origin,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xi2Prime {
    /// Coefficients at the fundamental weights of the Levi quotient, keyed by
    /// simple root index.
    pub lambda_l: BTreeMap<usize, i64>,
    pub chi_tilde: CharVec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xi3Prime {
    pub mu: CharVec,
    pub mu_lift: Option<WeightVec>,
}

/// Lie-algebra data for the sufficient test: `𝔥_u` and generators of `[𝔰, 𝔰]`.
#[derive(Debug, Clone, Default)]
pub struct LieData {
    pub h_u: Vec<AlgVec>,
    pub s_commutator: Vec<AlgVec>,
}

#[derive(Debug, Clone)]
pub struct GeneralDatum {
    pub rs: RootSystem,
    pub pi_l: BTreeSet<usize>,
    pub char_space_k: CharSpace,
    pub omega_bar: BTreeMap<usize, CharVec>,
    pub codomain: CharSpace,
    /// `codomain.dim() x rank`, column `i` is `ι(ϖ_i)`.
    pub iota: IntMatrix,
    pub xi2_prime: Vec<Xi2Prime>,
    pub xi3_prime: Vec<Xi3Prime>,
    pub sigma_simple: BTreeSet<usize>,
    pub unique_expected: bool,
    pub lie: Option<LieData>,
}

fn dim_err(what: &str, expected: usize, found: usize) -> GeneralError {
    GeneralError::Dimension {
        what: what.to_string(),
        expected,
        found,
    }
}

impl GeneralDatum {
    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// `Π ∖ Π_L` in increasing order.
    pub fn outside_levi(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|i| !self.pi_l.contains(i))
            .collect()
    }

    pub fn validate(&self) -> Result<(), GeneralError> {
        let n = self.rank();
        let range = |what: &str, i: usize| {
            if i >= n {
                Err(GeneralError::IndexOutOfRange {
                    what: what.to_string(),
                    index: i + 1,
                })
            } else {
                Ok(())
            }
        };
        for &i in &self.pi_l {
            range("pi_L", i)?;
        }
        for &i in &self.sigma_simple {
            range("sigma_simple", i)?;
        }
        if self.iota.cols() != n {
            return Err(dim_err("iota columns", n, self.iota.cols()));
        }
        if self.iota.rows() != self.codomain.dim() {
            return Err(dim_err("iota rows", self.codomain.dim(), self.iota.rows()));
        }
        for &a in self.omega_bar.keys() {
            range("omega_bar", a)?;
            if self.pi_l.contains(&a) {
                return Err(GeneralError::UnexpectedOmegaBar(a + 1));
            }
        }
        for a in self.outside_levi() {
            let v = self
                .omega_bar
                .get(&a)
                .ok_or(GeneralError::MissingOmegaBar(a + 1))?;
            if v.0.len() != self.char_space_k.dim() {
                return Err(dim_err("omega_bar", self.char_space_k.dim(), v.0.len()));
            }
        }
        for x in &self.xi2_prime {
            for &i in x.lambda_l.keys() {
                range("xi2_prime lambda_L", i)?;
            }
            if x.chi_tilde.0.len() != self.char_space_k.dim() {
                return Err(dim_err(
                    "chi_tilde",
                    self.char_space_k.dim(),
                    x.chi_tilde.0.len(),
                ));
            }
        }
        for x in &self.xi3_prime {
            if x.mu.0.len() != self.codomain.dim() {
                return Err(dim_err("mu", self.codomain.dim(), x.mu.0.len()));
            }
            if let Some(l) = &x.mu_lift {
                if l.0.len() != n {
                    return Err(dim_err("mu_lift", n, l.0.len()));
                }
            }
        }
        Ok(())
    }

    /// `ι(w)` reduced in the codomain.
    pub fn restrict(&self, w: &WeightVec) -> CharVec {
        let v = to_small(&self.iota.mul_vec(&to_big(&w.0))).expect("restriction fits in i64");
        self.codomain.vec(v).expect("codomain dimension")
    }

    fn simple_root_weight(&self, alpha: usize) -> WeightVec {
        self.rs.root_to_weight(&self.rs.simple_root(alpha))
    }
}

/// `{(ϖ_α, −ϖ̄_α) : α ∈ Π ∖ Π_L}`.
pub fn compute_xi1(d: &GeneralDatum) -> Result<Vec<Biweight>, GeneralError> {
    d.outside_levi()
        .into_iter()
        .map(|a| {
            let ob = d
                .omega_bar
                .get(&a)
                .ok_or(GeneralError::MissingOmegaBar(a + 1))?;
            Ok(Biweight {
                lambda: d.rs.fundamental_weight(a),
                chi: d.char_space_k.neg(ob),
                origin: Origin::Xi1,
            })
        })
        .collect()
}

/// The inverse of the restriction isomorphism from the Levi quotient: each
/// fundamental weight `ϖ'_α` goes to `ϖ_α`.
pub fn lift_tau_l(
    d: &GeneralDatum,
    index: usize,
    lambda_l: &BTreeMap<usize, i64>,
) -> Result<WeightVec, GeneralError> {
    let mut w = WeightVec::zero(d.rank());
    for (&a, &c) in lambda_l {
        if c == 0 {
            continue;
        }
        if !d.pi_l.contains(&a) {
            return Err(GeneralError::SupportOutsidePiL {
                index: index + 1,
                root: a + 1,
            });
        }
        w.0[a] = c;
    }
    Ok(w)
}

pub fn compute_xi2(d: &GeneralDatum) -> Result<Vec<Biweight>, GeneralError> {
    let outside: BTreeSet<usize> = d.outside_levi().into_iter().collect();
    d.xi2_prime
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let lambda = lift_tau_l(d, k, &x.lambda_l)?;
            if let Some(&root) = wsupp(&lambda).intersection(&outside).next() {
                return Err(GeneralError::SupportClash {
                    index: k + 1,
                    root: root + 1,
                });
            }
            Ok(Biweight {
                lambda,
                chi: x.chi_tilde.clone(),
                origin: Origin::Xi2,
            })
        })
        .collect()
}

/// `Π12`: simple roots whose fundamental weight occurs in some Ξ₁₂ weight.
pub fn pi12(xi12: &[Biweight]) -> BTreeSet<usize> {
    xi12.iter().flat_map(|b| wsupp(&b.lambda)).collect()
}

/// Positions in `xi12` of the elements with `ϖ_α ∈ supp λ`.
pub fn xi12_at(xi12: &[Biweight], alpha: usize) -> Vec<usize> {
    xi12.iter()
        .enumerate()
        .filter(|(_, b)| b.lambda.0[alpha] > 0)
        .map(|(k, _)| k)
        .collect()
}

fn rows_to_small(rows: Vec<Vec<BigInt>>) -> Result<Vec<Vec<i64>>, GeneralError> {
    rows.iter().map(|r| Ok(to_small(r)?)).collect()
}

/// Hermite basis of `Ker ι`.
pub fn kernel_basis(d: &GeneralDatum) -> Result<Vec<Vec<i64>>, GeneralError> {
    rows_to_small(kernel_mod(&d.iota, &d.codomain.relation_matrix()))
}

fn mu_matrix(d: &GeneralDatum) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = d.xi3_prime.iter().map(|x| to_big(&x.mu.0)).collect();
    IntMatrix::from_columns(d.codomain.dim(), &cols)
}

/// Hermite basis of `Λ = ι⁻¹(ℤ{μ})`.
pub fn lambda_lattice(d: &GeneralDatum) -> Result<Vec<Vec<i64>>, GeneralError> {
    let rel = mu_matrix(d).hcat(&d.codomain.relation_matrix());
    rows_to_small(kernel_mod(&d.iota, &rel))
}

pub fn in_lambda(d: &GeneralDatum, w: &WeightVec) -> Result<bool, GeneralError> {
    let rel = mu_matrix(d).hcat(&d.codomain.relation_matrix());
    let target = d.iota.mul_vec(&to_big(&w.0));
    Ok(in_sublattice_mod(&target, &[], &rel))
}

/// Coordinates of `ι(α)` in the basis `μ_1, …, μ_k`.
pub fn rho_values(d: &GeneralDatum, alpha: usize) -> Result<Vec<i64>, GeneralError> {
    let target = d.iota.mul_vec(&to_big(&d.simple_root_weight(alpha).0));
    let sol = solve_mod(&mu_matrix(d), &d.codomain.relation_matrix(), &target)
        .ok_or(GeneralError::AlphaNotInLambda(alpha + 1))?;
    if !sol.is_unique() {
        return Err(GeneralError::NoExpression(alpha + 1));
    }
    Ok(to_small(&sol.particular)?)
}

/// `ρ_μ(α)`.
pub fn rho_value(d: &GeneralDatum, mu_index: usize, alpha: usize) -> Result<i64, GeneralError> {
    Ok(rho_values(d, alpha)?[mu_index])
}

/// Rows indexed by μ, columns by simple roots; `None` where `α ∉ Λ`.
#[allow(clippy::needless_range_loop)]
pub fn rho_table(d: &GeneralDatum) -> Result<Vec<Vec<Option<i64>>>, GeneralError> {
    let k = d.xi3_prime.len();
    let mut table = vec![vec![None; d.rank()]; k];
    for a in 0..d.rank() {
        match rho_values(d, a) {
            Ok(vals) => {
                for (j, v) in vals.into_iter().enumerate() {
                    table[j][a] = Some(v);
                }
            }
            Err(GeneralError::AlphaNotInLambda(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(table)
}

/// `δ(μ, α)`.
pub fn delta_coeff(
    d: &GeneralDatum,
    xi12: &[Biweight],
    mu_index: usize,
    alpha: usize,
) -> Result<i64, GeneralError> {
    if !d.sigma_simple.contains(&alpha) || xi12_at(xi12, alpha).len() != 1 {
        return Ok(0);
    }
    Ok(i64::from(rho_value(d, mu_index, alpha)? == 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NecessaryVerdict {
    /// `α` is certainly not a spherical root.
    NecessaryFailed,
    /// The conditions hold; this alone does not decide membership.
    NecessaryPassed,
    /// `α ∉ Π12` or `|Ξ12(α)| ≠ 1`.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryReport {
    pub alpha: usize,
    pub in_lambda: bool,
    pub rho: Option<Vec<i64>>,
    /// The μ with `ρ_μ(α) = 1` when it is unique and all others are `≤ 0`.
    pub witness: Option<usize>,
    pub verdict: NecessaryVerdict,
}

pub fn check_necessary(
    d: &GeneralDatum,
    xi12: &[Biweight],
    alpha: usize,
) -> Result<NecessaryReport, GeneralError> {
    let in_l = in_lambda(d, &d.simple_root_weight(alpha))?;
    let mut report = NecessaryReport {
        alpha,
        in_lambda: in_l,
        rho: None,
        witness: None,
        verdict: NecessaryVerdict::NotApplicable,
    };
    if xi12_at(xi12, alpha).len() != 1 {
        return Ok(report);
    }
    if !in_l {
        report.verdict = NecessaryVerdict::NecessaryFailed;
        return Ok(report);
    }
    let rho = match rho_values(d, alpha) {
        Ok(r) => r,
        Err(GeneralError::NoExpression(_)) => {
            report.verdict = NecessaryVerdict::NecessaryFailed;
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let ones: Vec<usize> = (0..rho.len()).filter(|&j| rho[j] == 1).collect();
    let rest_ok = rho.iter().all(|&v| v <= 1);
    report.verdict = if ones.len() == 1 && rest_ok {
        report.witness = Some(ones[0]);
        NecessaryVerdict::NecessaryPassed
    } else {
        NecessaryVerdict::NecessaryFailed
    };
    report.rho = Some(rho);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieVerdict {
    /// `I_α ⊂ 𝔥_u`, so `α` is not a spherical root.
    NotSpherical,
    /// `I_α ⊄ 𝔥_u` and `𝔤_{−α}` commutes with `[𝔰, 𝔰]`, so `α` is a spherical root.
    Spherical,
    Inconclusive,
}

impl LieVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            LieVerdict::NotSpherical => "not_spherical",
            LieVerdict::Spherical => "spherical",
            LieVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// Sufficient and necessary Lie-algebra test for `α ∈ Π ∖ Π_L`.
///
/// `h_u` must describe a generic conjugate of `H`; the result is meaningless
/// otherwise.
pub fn check_sufficient_lie(
    alg: &ChevalleyAlgebra,
    alpha: usize,
    p_u: &[AlgVec],
    h_u: &[AlgVec],
    s_prime_gens: &[AlgVec],
) -> Result<LieVerdict, GeneralError> {
    let mut neg = vec![0; alg.root_system().rank()];
    neg[alpha] = -1;
    let e = alg.e(&neg)?;
    let ideal = alg.ideal_closure(std::slice::from_ref(&e), p_u)?;
    if crate::chevalley::is_contained(&ideal.basis(), h_u) {
        return Ok(LieVerdict::NotSpherical);
    }
    if alg.commutes_with_all(&e, s_prime_gens) {
        Ok(LieVerdict::Spherical)
    } else {
        Ok(LieVerdict::Inconclusive)
    }
}

/// `Π_M = {α ∈ Π_L : (α, λ) = 0 for all λ}` and a basis of the cocharacters
/// killed by every `λ`.
pub fn levi_kernel_helper(
    rs: &RootSystem,
    pi_l: &BTreeSet<usize>,
    basis: &[WeightVec],
) -> Result<(BTreeSet<usize>, Vec<Vec<i64>>), GeneralError> {
    let pi_m = pi_l
        .iter()
        .copied()
        .filter(|&a| {
            basis
                .iter()
                .all(|l| rs.inner_root_weight(&rs.simple_root(a), l) == 0)
        })
        .collect();
    let rows: Vec<Vec<i64>> = basis.iter().map(|w| w.0.clone()).collect();
    let m = if rows.is_empty() {
        IntMatrix::zeros(0, rs.rank())
    } else {
        IntMatrix::from_rows(&rows)
    };
    let torus = rows_to_small(kernel_mod(&m, &IntMatrix::zeros(m.rows(), 0)))?;
    Ok((pi_m, torus))
}

/// A Ξ₃ system with a positive-dimensional solution family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonUniqueReport {
    pub mu_index: usize,
    pub unknowns: Vec<String>,
    pub particular: Vec<i64>,
    pub homogeneous: Vec<Vec<i64>>,
    /// Reduced equations such as `"a = −1"`, `"b + c = 1"`.
    pub relations: Vec<String>,
}

/// Outcome of solving the Ξ₃ system for one μ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Xi3Outcome {
    Unique {
        biweight: Biweight,
        coefficients: Vec<i64>,
    },
    NonUnique(NonUniqueReport),
}

#[derive(Debug, Clone)]
pub struct MonoidResult {
    pub generators: Vec<Biweight>,
    pub kernel_basis: Vec<Vec<i64>>,
    pub lambda_basis: Vec<Vec<i64>>,
    pub rho_table: Vec<Vec<Option<i64>>>,
    pub lifts: Vec<WeightVec>,
    /// Ξ₃ coefficients `a_{μ,Ω}` per μ, for uniquely solved systems.
    pub xi3_coefficients: Vec<Option<Vec<i64>>>,
    pub unknown_names: Vec<Vec<String>>,
    pub non_unique: Vec<NonUniqueReport>,
    pub sigma_used: BTreeSet<usize>,
    pub diagnostics: Vec<Diagnostic>,
}

impl MonoidResult {
    pub fn is_unique(&self) -> bool {
        self.non_unique.is_empty()
    }
}

/// Names for the Ξ₁₂ coefficients of one μ: `a, b, c, …`, with the μ index
/// appended when there are several μ.
pub fn unknown_names(count: usize, mu_index: usize, n_mu: usize) -> Vec<String> {
    (0..count)
        .map(|k| {
            let base = if k < 26 {
                ((b'a' + k as u8) as char).to_string()
            } else {
                format!("x{}_", k + 1)
            };
            if n_mu > 1 {
                format!("{base}{}", mu_index + 1)
            } else {
                base
            }
        })
        .collect()
}

/// Renders `coeffs · names = rhs` with a Unicode minus.
pub fn format_equation(coeffs: &[i64], names: &[String], rhs: i64) -> String {
    let mut s = String::new();
    for (c, n) in coeffs.iter().zip(names) {
        if *c == 0 {
            continue;
        }
        let mag = c.abs();
        let term = if mag == 1 {
            n.clone()
        } else {
            format!("{mag}{n}")
        };
        if s.is_empty() {
            if *c < 0 {
                s.push('−');
            }
        } else {
            s.push_str(if *c < 0 { " − " } else { " + " });
        }
        s.push_str(&term);
    }
    if s.is_empty() {
        s.push('0');
    }
    let r = if rhs < 0 {
        format!("−{}", -rhs)
    } else {
        rhs.to_string()
    };
    format!("{s} = {r}")
}

/// Finds `μ̃` with `ι(μ̃) = μ`, checking a supplied lift when present.
pub fn lift_mu(d: &GeneralDatum, mu_index: usize) -> Result<WeightVec, GeneralError> {
    let x = &d.xi3_prime[mu_index];
    if let Some(l) = &x.mu_lift {
        if !d.codomain.equivalent(&d.restrict(l), &x.mu) {
            return Err(GeneralError::BadLift(mu_index + 1));
        }
        return Ok(l.clone());
    }
    let sol = solve_mod(&d.iota, &d.codomain.relation_matrix(), &to_big(&x.mu.0))
        .ok_or(GeneralError::NoLift(mu_index + 1))?;
    Ok(WeightVec(to_small(&sol.particular)?))
}

/// Solves the Ξ₃ system for one μ with the given lift.
pub fn solve_xi3_one(
    d: &GeneralDatum,
    xi12: &[Biweight],
    mu_index: usize,
    lift: &WeightVec,
) -> Result<Xi3Outcome, GeneralError> {
    let p12: Vec<usize> = pi12(xi12).into_iter().collect();
    let m = xi12.len();
    let mut rows = Vec::with_capacity(p12.len());
    let mut rhs = Vec::with_capacity(p12.len());
    for &a in &p12 {
        rows.push(xi12.iter().map(|b| b.lambda.0[a]).collect::<Vec<i64>>());
        rhs.push(delta_coeff(d, xi12, mu_index, a)? - lift.0[a]);
    }
    let a_mat = if rows.is_empty() {
        IntMatrix::zeros(0, m)
    } else {
        IntMatrix::from_rows(&rows)
    };
    let sol: Solution = solve_mod(&a_mat, &IntMatrix::zeros(rows.len(), 0), &to_big(&rhs))
        .ok_or(GeneralError::Inconsistent(mu_index + 1))?;
    let x = to_small(&sol.particular)?;
    if !sol.is_unique() {
        let names = unknown_names(m, mu_index, d.xi3_prime.len());
        let aug: Vec<Vec<BigInt>> = rows
            .iter()
            .zip(&rhs)
            .map(|(r, &b)| {
                let mut v = to_big(r);
                v.push(BigInt::from(b));
                v
            })
            .collect();
        let reduced = rows_to_small(hermite_rows(&aug, m + 1))?;
        let relations = reduced
            .iter()
            .map(|r| format_equation(&r[..m], &names, r[m]))
            .collect();
        return Ok(Xi3Outcome::NonUnique(NonUniqueReport {
            mu_index,
            unknowns: names,
            particular: x,
            homogeneous: rows_to_small(sol.homogeneous)?,
            relations,
        }));
    }
    let mut lambda = lift.clone();
    let mut chi = d.char_space_k.zero();
    for (c, b) in x.iter().zip(xi12) {
        lambda = lambda.add(&b.lambda.scale(*c));
        chi = d.char_space_k.add(&chi, &d.char_space_k.scale(&b.chi, *c));
    }
    if !is_dominant(&lambda) {
        return Err(GeneralError::NotDominant {
            index: mu_index + 1,
            lambda: lambda.0,
        });
    }
    for &a in &p12 {
        if lambda.0[a] != delta_coeff(d, xi12, mu_index, a)? {
            return Err(GeneralError::DeltaMismatch {
                index: mu_index + 1,
                alpha: a + 1,
            });
        }
    }
    Ok(Xi3Outcome::Unique {
        biweight: Biweight {
            lambda,
            chi,
            origin: Origin::Xi3,
        },
        coefficients: x,
    })
}

/// Solves every Ξ₃ system with the computed or supplied lifts.
pub fn solve_xi3(d: &GeneralDatum, xi12: &[Biweight]) -> Result<Vec<Xi3Outcome>, GeneralError> {
    (0..d.xi3_prime.len())
        .map(|j| {
            let lift = lift_mu(d, j)?;
            solve_xi3_one(d, xi12, j, &lift)
        })
        .collect()
}

fn same_biweight(d: &GeneralDatum, a: &Biweight, b: &Biweight) -> bool {
    a.lambda == b.lambda && d.char_space_k.equivalent(&a.chi, &b.chi)
}

/// Runs the full pipeline.
pub fn compute_monoid(d: &GeneralDatum) -> Result<MonoidResult, GeneralError> {
    d.validate()?;
    let mut diagnostics = Vec::new();

    let xi1 = compute_xi1(d)?;
    let xi2 = compute_xi2(d)?;
    let xi12: Vec<Biweight> = xi1.iter().chain(&xi2).cloned().collect();
    let p12 = pi12(&xi12);

    let kernel = kernel_basis(d)?;
    let lambda_basis = lambda_lattice(d)?;

    let mut result = MonoidResult {
        generators: xi12.clone(),
        kernel_basis: kernel.clone(),
        lambda_basis,
        rho_table: Vec::new(),
        lifts: Vec::new(),
        xi3_coefficients: Vec::new(),
        unknown_names: Vec::new(),
        non_unique: Vec::new(),
        sigma_used: d.sigma_simple.clone(),
        diagnostics: Vec::new(),
    };

    if d.xi3_prime.is_empty() {
        diagnostics.push(Diagnostic::new(
            Severity::Info,
            codes::PARABOLIC_INDUCTION,
            "no Ξ′₃ data: the monoid is generated by Ξ₁ and Ξ₂",
        ));
    } else {
        // Ker ι inside the span of the Ξ₁₂ weights makes Ξ₃ independent of lifts.
        let span: Vec<Vec<BigInt>> = xi12.iter().map(|b| to_big(&b.lambda.0)).collect();
        let zero_mod = vec![0; d.rank()];
        let outside: Vec<&Vec<i64>> = kernel
            .iter()
            .filter(|k| !in_sublattice(&to_big(k), &span, &zero_mod))
            .collect();
        if !outside.is_empty() {
            diagnostics.push(
                Diagnostic::new(
                    Severity::Warning,
                    codes::KERNEL_OUTSIDE_XI12_SPAN,
                    "Ker ι is not contained in the span of the Ξ₁₂ weights",
                )
                .with_data(json!({ "vectors": outside })),
            );
        }

        result.rho_table = rho_table(d)?;
        result.lifts = (0..d.xi3_prime.len())
            .map(|j| lift_mu(d, j))
            .collect::<Result<_, _>>()?;
    }

    // Validate the declared simple spherical roots.
    for &a in &d.sigma_simple {
        if !in_lambda(d, &d.simple_root_weight(a))? {
            return Err(GeneralError::SigmaInconsistent {
                alpha: a + 1,
                reason: "it is not in the weight lattice".into(),
            });
        }
    }
    if !d.xi3_prime.is_empty() {
        for &a in &p12 {
            let rep = check_necessary(d, &xi12, a)?;
            let declared = d.sigma_simple.contains(&a);
            match (rep.verdict, declared) {
                (NecessaryVerdict::NecessaryFailed, true) => {
                    return Err(GeneralError::SigmaInconsistent {
                        alpha: a + 1,
                        reason: "it fails the necessary lattice conditions".into(),
                    });
                }
                (NecessaryVerdict::NecessaryPassed, false) => {
                    diagnostics.push(
                        Diagnostic::new(
                            Severity::Info,
                            codes::NECESSARY_PASSED_NOT_IN_SIGMA,
                            format!(
                                "α{} satisfies the necessary conditions but is not declared spherical",
                                a + 1
                            ),
                        )
                        .with_data(json!({ "alpha": a + 1, "rho": rep.rho })),
                    );
                }
                _ => {}
            }
        }
    }

    if let Some(lie) = &d.lie {
        let alg = ChevalleyAlgebra::new(d.rs.clone());
        let pi_l: Vec<usize> = d.pi_l.iter().copied().collect();
        let p_u = alg.nilradical_basis(&pi_l);
        for a in d.outside_levi() {
            let verdict = check_sufficient_lie(&alg, a, &p_u, &lie.h_u, &lie.s_commutator)?;
            let declared = d.sigma_simple.contains(&a);
            match (verdict, declared) {
                (LieVerdict::NotSpherical, true) => {
                    return Err(GeneralError::SigmaInconsistent {
                        alpha: a + 1,
                        reason: "its ideal lies in 𝔥_u".into(),
                    })
                }
                (LieVerdict::Spherical, false) => {
                    return Err(GeneralError::SigmaMissing {
                        alpha: a + 1,
                        reason: "the sufficient Lie-algebra test holds".into(),
                    })
                }
                _ => {}
            }
            let code = match verdict {
                LieVerdict::Spherical => codes::LIE_SPHERICAL,
                LieVerdict::NotSpherical => codes::LIE_NOT_SPHERICAL,
                LieVerdict::Inconclusive => codes::LIE_INCONCLUSIVE,
            };
            diagnostics.push(
                Diagnostic::new(
                    Severity::Info,
                    code,
                    format!("Lie-algebra test for α{}: {}", a + 1, verdict.as_str()),
                )
                .with_data(json!({ "alpha": a + 1, "verdict": verdict.as_str() })),
            );
        }
    }

    let n_mu = d.xi3_prime.len();
    for j in 0..n_mu {
        let lift = result.lifts[j].clone();
        result
            .unknown_names
            .push(unknown_names(xi12.len(), j, n_mu));
        match solve_xi3_one(d, &xi12, j, &lift)? {
            Xi3Outcome::Unique {
                biweight,
                coefficients,
            } => {
                // Re-solve with each kernel translate of the lift.
                for k in &kernel {
                    let moved = lift.add(&WeightVec(k.clone()));
                    let same = matches!(
                        solve_xi3_one(d, &xi12, j, &moved),
                        Ok(Xi3Outcome::Unique { biweight: ref b, .. }) if same_biweight(d, b, &biweight)
                    );
                    if !same {
                        diagnostics.push(
                            Diagnostic::new(
                                Severity::Warning,
                                codes::LIFT_SENSITIVE,
                                format!(
                                    "the Ξ₃ generator for μ{} depends on the chosen lift",
                                    j + 1
                                ),
                            )
                            .with_data(json!({ "mu": j + 1, "kernel_vector": k })),
                        );
                    }
                }
                result.generators.push(biweight);
                result.xi3_coefficients.push(Some(coefficients));
            }
            Xi3Outcome::NonUnique(rep) => {
                if d.unique_expected {
                    return Err(GeneralError::UniquenessViolated(j + 1));
                }
                diagnostics.push(
                    Diagnostic::new(
                        Severity::Warning,
                        codes::NON_UNIQUE,
                        format!(
                            "the Ξ₃ system for μ{} does not determine its coefficients: {}",
                            j + 1,
                            rep.relations.join(", ")
                        ),
                    )
                    .with_data(json!({ "mu": j + 1, "relations": rep.relations })),
                );
                result.non_unique.push(rep);
                result.xi3_coefficients.push(None);
            }
        }
    }

    if result.is_unique() {
        let expected = d.outside_levi().len() + d.xi2_prime.len() + n_mu;
        if result.generators.len() != expected {
            return Err(GeneralError::RankMismatch {
                expected,
                found: result.generators.len(),
            });
        }
    }
    for i in 0..result.generators.len() {
        for j in i + 1..result.generators.len() {
            if same_biweight(d, &result.generators[i], &result.generators[j]) {
                return Err(GeneralError::DuplicateGenerators(i + 1, j + 1));
            }
        }
    }

    result.diagnostics = diagnostics;
    Ok(result)
}

/// Per-root report used by the `check` front end.
#[derive(Debug, Clone)]
pub struct AlphaReport {
    pub alpha: usize,
    pub in_pi12: bool,
    pub xi12_count: usize,
    pub declared: bool,
    pub necessary: NecessaryReport,
    pub lie: Option<LieVerdict>,
}

pub fn check_alpha(d: &GeneralDatum, alpha: usize) -> Result<AlphaReport, GeneralError> {
    d.validate()?;
    if alpha >= d.rank() {
        return Err(GeneralError::IndexOutOfRange {
            what: "alpha".into(),
            index: alpha + 1,
        });
    }
    let xi12: Vec<Biweight> = compute_xi1(d)?.into_iter().chain(compute_xi2(d)?).collect();
    let necessary = check_necessary(d, &xi12, alpha)?;
    let lie = match &d.lie {
        Some(l) if !d.pi_l.contains(&alpha) => {
            let alg = ChevalleyAlgebra::new(d.rs.clone());
            let pi_l: Vec<usize> = d.pi_l.iter().copied().collect();
            let p_u = alg.nilradical_basis(&pi_l);
            Some(check_sufficient_lie(
                &alg,
                alpha,
                &p_u,
                &l.h_u,
                &l.s_commutator,
            )?)
        }
        _ => None,
    };
    Ok(AlphaReport {
        alpha,
        in_pi12: pi12(&xi12).contains(&alpha),
        xi12_count: xi12_at(&xi12, alpha).len(),
        declared: d.sigma_simple.contains(&alpha),
        necessary,
        lie,
    })
}
