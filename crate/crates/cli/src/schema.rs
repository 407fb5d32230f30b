//! JSON input documents. Simple-root indices are 1-based throughout.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use ewm_core::general::{LieData, Xi2Prime, Xi3Prime};
use ewm_core::{
    AlgVec, CartanType, CharSpace, ChevalleyAlgebra, Family, GeneralDatum, IntMatrix, RootSystem,
    RootVec, SolvableDatum, WeightVec,
};

/// A schema violation located by a JSON pointer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{pointer}: {message}")]
pub struct SchemaError {
    pub pointer: String,
    pub message: String,
}

impl SchemaError {
    pub fn at(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    General,
    Solvable,
    Roots,
    Check,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::General => "general",
            Mode::Solvable => "solvable",
            Mode::Roots => "roots",
            Mode::Check => "check",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFactor {
    pub family: String,
    pub rank: usize,
}

/// Dense coefficient array or sparse `{"index": coeff}` map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightSpec {
    Dense(Vec<i64>),
    Sparse(BTreeMap<String, i64>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharSpaceSpec {
    pub free_rank: usize,
    #[serde(default)]
    pub moduli: Vec<i64>,
    #[serde(default)]
    pub names: Option<Vec<String>>,
    #[serde(default)]
    pub relations: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Xi2Spec {
    pub lambda_l: WeightSpec,
    pub chi_tilde: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Xi3Spec {
    pub mu: Vec<i64>,
    /// `μ̃` in weight coordinates; computed when absent.
    #[serde(default)]
    pub lift: Option<WeightSpec>,
    /// `μ̃` given in simple-root coordinates instead.
    #[serde(default)]
    pub lift_root: Option<Vec<i64>>,
}

/// One term `coeff · e_β` (signed root coordinates) or `coeff · h_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieTerm {
    #[serde(default)]
    pub e: Option<Vec<i64>>,
    #[serde(default)]
    pub h: Option<usize>,
    #[serde(default = "one")]
    pub coeff: i64,
}

fn one() -> i64 {
    1
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieSpec {
    pub h_u: Vec<Vec<LieTerm>>,
    #[serde(default)]
    pub s_commutator: Vec<Vec<LieTerm>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneralInput {
    pub mode: Mode,
    pub group: Vec<GroupFactor>,
    pub pi_l: BTreeSet<usize>,
    pub char_space_k: CharSpaceSpec,
    pub omega_bar: BTreeMap<String, Vec<i64>>,
    pub codomain: CharSpaceSpec,
    /// Columns `ι(ϖ_1), …, ι(ϖ_n)`.
    pub iota: Vec<Vec<i64>>,
    #[serde(default)]
    pub xi2_prime: Vec<Xi2Spec>,
    #[serde(default)]
    pub xi3_prime: Vec<Xi3Spec>,
    pub sigma_simple: BTreeSet<usize>,
    #[serde(default = "yes")]
    pub unique_expected: bool,
    #[serde(default)]
    pub lie: Option<LieSpec>,
    /// Roots to report on in `check` mode; all simple roots when absent.
    #[serde(default)]
    pub alpha: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolvableInput {
    pub mode: Mode,
    pub group: Vec<GroupFactor>,
    pub active_roots: Vec<Vec<i64>>,
    /// Defaults to `𝔛(T)` with `ι` the identity.
    #[serde(default)]
    pub codomain: Option<CharSpaceSpec>,
    #[serde(default)]
    pub iota: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootsInput {
    pub mode: Mode,
    pub group: Vec<GroupFactor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputDocument {
    General(GeneralInput),
    Solvable(SolvableInput),
    Roots(RootsInput),
    Check(GeneralInput),
}

impl InputDocument {
    pub fn mode(&self) -> Mode {
        match self {
            InputDocument::General(_) => Mode::General,
            InputDocument::Solvable(_) => Mode::Solvable,
            InputDocument::Roots(_) => Mode::Roots,
            InputDocument::Check(_) => Mode::Check,
        }
    }
}

fn typed<T: serde::de::DeserializeOwned>(v: serde_json::Value) -> Result<T, SchemaError> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let mut pointer = String::new();
        for seg in e.path().iter() {
            match seg {
                serde_path_to_error::Segment::Seq { index } => {
                    pointer.push_str(&format!("/{index}"))
                }
                serde_path_to_error::Segment::Map { key } => pointer.push_str(&format!("/{key}")),
                serde_path_to_error::Segment::Enum { variant } => {
                    pointer.push_str(&format!("/{variant}"))
                }
                serde_path_to_error::Segment::Unknown => {}
            }
        }
        let message = e.inner().to_string();
        // Point at the missing member itself rather than its parent.
        if let Some(rest) = message.strip_prefix("missing field `") {
            if let Some(name) = rest.split('`').next() {
                pointer.push('/');
                pointer.push_str(name);
            }
        }
        if pointer.is_empty() {
            pointer.push('/');
        }
        SchemaError { pointer, message }
    })
}

/// Parses a document, checking its `mode` against the requested one.
pub fn parse_input(text: &str, expected: Mode) -> Result<InputDocument, SchemaError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| {
        SchemaError::at(
            "/",
            format!(
                "invalid JSON at line {}, column {}: {e}",
                e.line(),
                e.column()
            ),
        )
    })?;
    let mode_value = value
        .get("mode")
        .cloned()
        .ok_or_else(|| SchemaError::at("/mode", "missing field `mode`"))?;
    let mode: Mode =
        serde_json::from_value(mode_value).map_err(|e| SchemaError::at("/mode", e.to_string()))?;
    if mode != expected {
        return Err(SchemaError::at(
            "/mode",
            format!(
                "document mode `{}` does not match command `{}`",
                mode.as_str(),
                expected.as_str()
            ),
        ));
    }
    Ok(match mode {
        Mode::General => InputDocument::General(typed(value)?),
        Mode::Check => InputDocument::Check(typed(value)?),
        Mode::Solvable => InputDocument::Solvable(typed(value)?),
        Mode::Roots => InputDocument::Roots(typed(value)?),
    })
}

pub fn root_system(group: &[GroupFactor]) -> Result<RootSystem, SchemaError> {
    let factors = group
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let fam: Family = f.family.parse().map_err(|e: ewm_core::RootSysError| {
                SchemaError::at(format!("/group/{k}/family"), e.to_string())
            })?;
            Ok((fam, f.rank))
        })
        .collect::<Result<Vec<_>, SchemaError>>()?;
    let t = CartanType::new(factors).map_err(|e| SchemaError::at("/group", e.to_string()))?;
    Ok(RootSystem::new(t))
}

fn simple_index(i: usize, n: usize, pointer: &str) -> Result<usize, SchemaError> {
    if i == 0 || i > n {
        return Err(SchemaError::at(
            pointer,
            format!("simple-root index {i} outside 1..={n}"),
        ));
    }
    Ok(i - 1)
}

fn weight(spec: &WeightSpec, n: usize, pointer: &str) -> Result<WeightVec, SchemaError> {
    match spec {
        WeightSpec::Dense(v) => {
            if v.len() != n {
                return Err(SchemaError::at(
                    pointer,
                    format!("expected {n} coefficients, got {}", v.len()),
                ));
            }
            Ok(WeightVec(v.clone()))
        }
        WeightSpec::Sparse(m) => {
            let mut w = vec![0; n];
            for (k, &c) in m {
                let p = format!("{pointer}/{k}");
                let i: usize = k
                    .parse()
                    .map_err(|_| SchemaError::at(&p, "keys must be simple-root indices"))?;
                w[simple_index(i, n, &p)?] = c;
            }
            Ok(WeightVec(w))
        }
    }
}

fn char_space(spec: &CharSpaceSpec, pointer: &str) -> Result<CharSpace, SchemaError> {
    let err = |e: ewm_core::IntLinError| SchemaError::at(pointer, e.to_string());
    let mut c = CharSpace::new(spec.free_rank, spec.moduli.clone()).map_err(err)?;
    if let Some(names) = &spec.names {
        c = c.with_names(names.clone()).map_err(err)?;
    }
    c.with_relations(spec.relations.clone()).map_err(err)
}

fn char_vec(c: &CharSpace, v: &[i64], pointer: &str) -> Result<ewm_core::CharVec, SchemaError> {
    c.vec(v.to_vec())
        .map_err(|e| SchemaError::at(pointer, e.to_string()))
}

fn iota_matrix(cols: &[Vec<i64>], n: usize, dim: usize) -> Result<IntMatrix, SchemaError> {
    if cols.len() != n {
        return Err(SchemaError::at(
            "/iota",
            format!("expected {n} columns ι(ϖ_i), got {}", cols.len()),
        ));
    }
    for (k, c) in cols.iter().enumerate() {
        if c.len() != dim {
            return Err(SchemaError::at(
                format!("/iota/{k}"),
                format!("expected {dim} coordinates, got {}", c.len()),
            ));
        }
    }
    let rows: Vec<Vec<i64>> = (0..dim)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect();
    Ok(if dim == 0 {
        IntMatrix::zeros(0, n)
    } else {
        IntMatrix::from_rows(&rows)
    })
}

fn lie_vec(
    alg: &ChevalleyAlgebra,
    terms: &[LieTerm],
    pointer: &str,
) -> Result<AlgVec, SchemaError> {
    let n = alg.root_system().rank();
    let mut v = AlgVec::zero();
    for (k, t) in terms.iter().enumerate() {
        let p = format!("{pointer}/{k}");
        let c = BigRational::from_integer(BigInt::from(t.coeff));
        let basis = match (&t.e, t.h) {
            (Some(r), None) => alg
                .e(r)
                .map_err(|e| SchemaError::at(format!("{p}/e"), e.to_string()))?,
            (None, Some(i)) => alg
                .h(simple_index(i, n, &format!("{p}/h"))?)
                .map_err(|e| SchemaError::at(format!("{p}/h"), e.to_string()))?,
            _ => {
                return Err(SchemaError::at(
                    &p,
                    "a term needs exactly one of `e` and `h`",
                ))
            }
        };
        v = v.add(&basis.scale(&c));
    }
    Ok(v)
}

impl GeneralInput {
    pub fn to_datum(&self) -> Result<GeneralDatum, SchemaError> {
        let rs = root_system(&self.group)?;
        let n = rs.rank();
        let pi_l = self
            .pi_l
            .iter()
            .map(|&i| simple_index(i, n, "/pi_l"))
            .collect::<Result<BTreeSet<_>, _>>()?;
        let k = char_space(&self.char_space_k, "/char_space_k")?;
        let codomain = char_space(&self.codomain, "/codomain")?;
        let mut omega_bar = BTreeMap::new();
        for (key, v) in &self.omega_bar {
            let p = format!("/omega_bar/{key}");
            let i: usize = key
                .parse()
                .map_err(|_| SchemaError::at(&p, "keys must be simple-root indices"))?;
            omega_bar.insert(simple_index(i, n, &p)?, char_vec(&k, v, &p)?);
        }
        let iota = iota_matrix(&self.iota, n, codomain.dim())?;
        let xi2_prime = self
            .xi2_prime
            .iter()
            .enumerate()
            .map(|(j, x)| {
                let p = format!("/xi2_prime/{j}");
                let w = weight(&x.lambda_l, n, &format!("{p}/lambda_l"))?;
                Ok(Xi2Prime {
                    lambda_l: w
                        .0
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (i, c))
                        .collect(),
                    chi_tilde: char_vec(&k, &x.chi_tilde, &format!("{p}/chi_tilde"))?,
                })
            })
            .collect::<Result<Vec<_>, SchemaError>>()?;
        let xi3_prime = self
            .xi3_prime
            .iter()
            .enumerate()
            .map(|(j, x)| {
                let p = format!("/xi3_prime/{j}");
                let mu_lift = match (&x.lift, &x.lift_root) {
                    (Some(_), Some(_)) => {
                        return Err(SchemaError::at(
                            &p,
                            "give at most one of `lift` and `lift_root`",
                        ))
                    }
                    (Some(w), None) => Some(weight(w, n, &format!("{p}/lift"))?),
                    (None, Some(r)) => {
                        if r.len() != n {
                            return Err(SchemaError::at(
                                format!("{p}/lift_root"),
                                format!("expected {n} coefficients, got {}", r.len()),
                            ));
                        }
                        Some(rs.root_to_weight(&RootVec(r.clone())))
                    }
                    (None, None) => None,
                };
                Ok(Xi3Prime {
                    mu: char_vec(&codomain, &x.mu, &format!("{p}/mu"))?,
                    mu_lift,
                })
            })
            .collect::<Result<Vec<_>, SchemaError>>()?;
        let sigma_simple = self
            .sigma_simple
            .iter()
            .map(|&i| simple_index(i, n, "/sigma_simple"))
            .collect::<Result<BTreeSet<_>, _>>()?;
        let lie = match &self.lie {
            None => None,
            Some(spec) => {
                let alg = ChevalleyAlgebra::new(rs.clone());
                let conv = |vs: &[Vec<LieTerm>], field: &str| {
                    vs.iter()
                        .enumerate()
                        .map(|(j, t)| lie_vec(&alg, t, &format!("/lie/{field}/{j}")))
                        .collect::<Result<Vec<_>, SchemaError>>()
                };
                Some(LieData {
                    h_u: conv(&spec.h_u, "h_u")?,
                    s_commutator: conv(&spec.s_commutator, "s_commutator")?,
                })
            }
        };
        Ok(GeneralDatum {
            rs,
            pi_l,
            char_space_k: k,
            omega_bar,
            codomain,
            iota,
            xi2_prime,
            xi3_prime,
            sigma_simple,
            unique_expected: self.unique_expected,
            lie,
        })
    }

    /// 0-based roots selected for `check` mode.
    pub fn check_roots(&self, n: usize) -> Result<Vec<usize>, SchemaError> {
        match &self.alpha {
            None => Ok((0..n).collect()),
            Some(list) => list
                .iter()
                .enumerate()
                .map(|(k, &i)| simple_index(i, n, &format!("/alpha/{k}")))
                .collect(),
        }
    }
}

impl SolvableInput {
    pub fn to_datum(&self) -> Result<SolvableDatum, SchemaError> {
        let rs = root_system(&self.group)?;
        let n = rs.rank();
        for (k, r) in self.active_roots.iter().enumerate() {
            if r.len() != n {
                return Err(SchemaError::at(
                    format!("/active_roots/{k}"),
                    format!("expected {n} coefficients, got {}", r.len()),
                ));
            }
        }
        let roots: Vec<RootVec> = self.active_roots.iter().cloned().map(RootVec).collect();
        match (&self.codomain, &self.iota) {
            (None, None) => Ok(SolvableDatum::with_identity(rs, roots)),
            (Some(c), Some(cols)) => {
                let codomain = char_space(c, "/codomain")?;
                let iota = iota_matrix(cols, n, codomain.dim())?;
                Ok(SolvableDatum {
                    rs,
                    active_roots: roots,
                    codomain,
                    iota,
                })
            }
            (None, Some(_)) => Err(SchemaError::at("/codomain", "missing field `codomain`")),
            (Some(_), None) => Err(SchemaError::at("/iota", "missing field `iota`")),
        }
    }
}
