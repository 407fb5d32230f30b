//! Output documents and their text rendering.

use serde::{Deserialize, Serialize};

use ewm_core::diag::{Diagnostic, Severity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    NonUnique,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorOut {
    pub lambda: Vec<i64>,
    pub chi: Vec<i64>,
    /// `xi1`, `xi2` or `xi3`.
    pub origin: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonUniqueOut {
    /// 1-based position of μ in `xi3_prime`.
    pub mu: usize,
    pub unknowns: Vec<String>,
    pub particular: Vec<i64>,
    pub homogeneous: Vec<Vec<i64>>,
    pub relations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvableOut {
    /// `π(β)` for each active root, 1-based.
    pub pi_map: Vec<usize>,
    pub phi: Vec<Vec<i64>>,
    /// Active-root positions (1-based) restricting to each element of Φ.
    pub fibers: Vec<Vec<usize>>,
    pub lambda_phi: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsOut {
    pub cartan_type: String,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub count: usize,
    /// Positive roots in simple-root coordinates, by height.
    pub positive_roots: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOut {
    pub alpha: usize,
    pub in_pi12: bool,
    pub xi12_count: usize,
    pub declared: bool,
    pub in_lambda: bool,
    pub rho: Option<Vec<i64>>,
    /// 1-based μ with `ρ_μ(α) = 1` when the necessary conditions hold.
    pub witness: Option<usize>,
    /// `necessary_passed`, `necessary_failed` or `not_applicable`.
    pub necessary: String,
    pub lie: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    pub input_sha256: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub mode: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub character_names: Vec<String>,
    #[serde(default)]
    pub generators: Vec<GeneratorOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_basis: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_basis: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho_table: Option<Vec<Vec<Option<i64>>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub non_unique: Vec<NonUniqueOut>,
    #[serde(default)]
    pub sigma_used: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solvable: Option<SolvableOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<RootsOut>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckOut>,
    #[serde(default)]
    pub diagnostics: Vec<Diagnostic>,
    pub meta: Meta,
}

impl OutputDocument {
    pub fn new(mode: &str, input_sha256: Option<String>) -> Self {
        Self {
            mode: mode.to_string(),
            status: Status::Ok,
            character_names: Vec::new(),
            generators: Vec::new(),
            lambda_basis: None,
            kernel_basis: None,
            rho_table: None,
            non_unique: Vec::new(),
            sigma_used: Vec::new(),
            solvable: None,
            roots: None,
            checks: Vec::new(),
            diagnostics: Vec::new(),
            meta: Meta {
                tool: "ewm".into(),
                version: env!("CARGO_PKG_VERSION").into(),
                input_sha256,
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("output serializes");
        s.push('\n');
        s
    }

    pub fn has_warnings(&self) -> bool {
        self.diagnostics
            .iter()
            .any(|d| d.severity >= Severity::Warning)
    }
}

/// `Σ c_i name_i` with a Unicode minus, `0` for the empty sum.
pub fn linear_combination(coeffs: &[i64], names: &[String]) -> String {
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
    s
}

fn weight_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("ϖ{i}")).collect()
}

fn root_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("α{i}")).collect()
}

/// Human-readable rendering of an output document.
pub fn render_text(doc: &OutputDocument) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("mode: {}", doc.mode));
    line(format!(
        "status: {}",
        match doc.status {
            Status::Ok => "ok",
            Status::NonUnique => "non-unique",
            Status::Error => "error",
        }
    ));
    if let Some(r) = &doc.roots {
        line(format!("type: {}", r.cartan_type));
        line(format!("positive roots: {}", r.count));
        let names = root_names(r.cartan_matrix.len());
        for root in &r.positive_roots {
            line(format!("  {}", linear_combination(root, &names)));
        }
    }
    if !doc.generators.is_empty() {
        line("generators:".into());
        for g in &doc.generators {
            let wn = weight_names(g.lambda.len());
            line(format!(
                "  ({}, {})  [{}]",
                linear_combination(&g.lambda, &wn),
                linear_combination(&g.chi, &doc.character_names),
                g.origin
            ));
        }
    }
    if let Some(s) = &doc.solvable {
        let list: Vec<String> = s.pi_map.iter().map(|i| format!("α{i}")).collect();
        line(format!("π: {}", list.join(", ")));
    }
    for nu in &doc.non_unique {
        line(format!(
            "μ{} not determined: {}",
            nu.mu,
            nu.relations.join("; ")
        ));
    }
    if doc.mode != "roots" {
        let sigma: Vec<String> = doc.sigma_used.iter().map(|i| format!("α{i}")).collect();
        line(format!("simple spherical roots: {{{}}}", sigma.join(", ")));
    }
    for c in &doc.checks {
        line(format!(
            "α{}: {}{}",
            c.alpha,
            c.necessary,
            c.lie
                .as_ref()
                .map(|l| format!(", lie {l}"))
                .unwrap_or_default()
        ));
    }
    for d in &doc.diagnostics {
        let sev = match d.severity {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        };
        line(format!("{sev} {}: {}", d.code, d.message));
    }
    out
}
