//! Command-line front end: JSON documents in, generator tables out.

pub mod output;
pub mod schema;

use std::io::Read;
use std::path::Path;

use serde_json::json;
use sha2::{Digest, Sha256};

use ewm_core::diag::{Diagnostic, Severity};
use ewm_core::general::{check_alpha, NecessaryVerdict};
use ewm_core::{compute_monoid, solvable_monoid, GeneralError, SolvableError};

pub use output::{render_text, OutputDocument, Status};
pub use schema::{parse_input, InputDocument, Mode, SchemaError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_MATH: i32 = 3;
pub const EXIT_NON_UNIQUE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub mode: Mode,
    pub format: Format,
    pub strict: bool,
    pub allow_nonunique: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failure that still produces an output document.
struct Failure {
    code: i32,
    diag: Diagnostic,
}

impl Failure {
    fn new(code: i32, name: &str, message: String) -> Self {
        Self {
            code,
            diag: Diagnostic::new(Severity::Error, name, message),
        }
    }
}

impl From<SchemaError> for Failure {
    fn from(e: SchemaError) -> Self {
        let mut f = Failure::new(EXIT_SCHEMA, "SCHEMA_ERROR", e.to_string());
        f.diag = f.diag.with_data(json!({ "pointer": e.pointer }));
        f
    }
}

fn general_failure(e: GeneralError) -> Failure {
    use GeneralError as G;
    let (code, name) = match &e {
        G::MissingOmegaBar(_) => (EXIT_SCHEMA, "MISSING_OMEGA_BAR"),
        G::UnexpectedOmegaBar(_) => (EXIT_SCHEMA, "UNEXPECTED_OMEGA_BAR"),
        G::Dimension { .. } => (EXIT_SCHEMA, "DIMENSION"),
        G::IndexOutOfRange { .. } => (EXIT_SCHEMA, "INDEX_OUT_OF_RANGE"),
        G::SupportOutsidePiL { .. } => (EXIT_SCHEMA, "SUPPORT_OUTSIDE_PI_L"),
        G::SupportClash { .. } => (EXIT_MATH, "SUPPORT_CLASH"),
        G::NoLift(_) => (EXIT_MATH, "NO_LIFT"),
        G::BadLift(_) => (EXIT_MATH, "BAD_LIFT"),
        G::AlphaNotInLambda(_) => (EXIT_MATH, "ALPHA_NOT_IN_LAMBDA"),
        G::NoExpression(_) => (EXIT_MATH, "NO_EXPRESSION"),
        G::Inconsistent(_) => (EXIT_MATH, "INCONSISTENT"),
        G::UniquenessViolated(_) => (EXIT_MATH, "UNIQUENESS_VIOLATED"),
        G::NotDominant { .. } => (EXIT_MATH, "NOT_DOMINANT"),
        G::DeltaMismatch { .. } => (EXIT_MATH, "DELTA_MISMATCH"),
        G::SigmaInconsistent { .. } => (EXIT_MATH, "SIGMA_INCONSISTENT"),
        G::SigmaMissing { .. } => (EXIT_MATH, "SIGMA_MISSING"),
        G::RankMismatch { .. } => (EXIT_MATH, "RANK_MISMATCH"),
        G::DuplicateGenerators(..) => (EXIT_MATH, "DUPLICATE_GENERATORS"),
        G::Lie(_) => (EXIT_MATH, "LIE_DATA"),
        G::IntLin(_) => (EXIT_MATH, "INTEGER_ARITHMETIC"),
    };
    Failure::new(code, name, e.to_string())
}

fn solvable_failure(e: SolvableError) -> Failure {
    use SolvableError as S;
    let (code, name) = match &e {
        S::NotPositiveRoot { .. } => (EXIT_SCHEMA, "NOT_POSITIVE_ROOT"),
        S::DuplicateRoot(_) => (EXIT_SCHEMA, "DUPLICATE_ROOT"),
        S::Dimension { .. } => (EXIT_SCHEMA, "DIMENSION"),
        S::NoCandidate { .. } => (EXIT_MATH, "PI_NO_CANDIDATE"),
        S::NotUnique { .. } => (EXIT_MATH, "PI_NOT_UNIQUE"),
        S::BijectionFailure { .. } => (EXIT_MATH, "BIJECTION_FAILURE"),
        S::IntLin(_) => (EXIT_MATH, "INTEGER_ARITHMETIC"),
    };
    Failure::new(code, name, e.to_string())
}

fn one_based(v: impl IntoIterator<Item = usize>) -> Vec<usize> {
    v.into_iter().map(|i| i + 1).collect()
}

fn generator_out(b: &ewm_core::Biweight) -> output::GeneratorOut {
    output::GeneratorOut {
        lambda: b.lambda.0.clone(),
        chi: b.chi.0.clone(),
        origin: b.origin.as_str().to_string(),
    }
}

fn fill(doc: &mut OutputDocument, input: &InputDocument) -> Result<(), Failure> {
    match input {
        InputDocument::General(g) => {
            let d = g.to_datum()?;
            let r = compute_monoid(&d).map_err(general_failure)?;
            doc.character_names = d.char_space_k.names().to_vec();
            doc.status = if r.is_unique() {
                Status::Ok
            } else {
                Status::NonUnique
            };
            doc.generators = r.generators.iter().map(generator_out).collect();
            doc.lambda_basis = Some(r.lambda_basis);
            doc.kernel_basis = Some(r.kernel_basis);
            doc.rho_table = Some(r.rho_table);
            doc.non_unique = r
                .non_unique
                .iter()
                .map(|n| output::NonUniqueOut {
                    mu: n.mu_index + 1,
                    unknowns: n.unknowns.clone(),
                    particular: n.particular.clone(),
                    homogeneous: n.homogeneous.clone(),
                    relations: n.relations.clone(),
                })
                .collect();
            doc.sigma_used = one_based(r.sigma_used);
            doc.diagnostics = r.diagnostics;
        }
        InputDocument::Check(g) => {
            let d = g.to_datum()?;
            for a in g.check_roots(d.rank())? {
                let rep = check_alpha(&d, a).map_err(general_failure)?;
                doc.checks.push(output::CheckOut {
                    alpha: a + 1,
                    in_pi12: rep.in_pi12,
                    xi12_count: rep.xi12_count,
                    declared: rep.declared,
                    in_lambda: rep.necessary.in_lambda,
                    rho: rep.necessary.rho.clone(),
                    witness: rep.necessary.witness.map(|w| w + 1),
                    necessary: match rep.necessary.verdict {
                        NecessaryVerdict::NecessaryPassed => "necessary_passed",
                        NecessaryVerdict::NecessaryFailed => "necessary_failed",
                        NecessaryVerdict::NotApplicable => "not_applicable",
                    }
                    .to_string(),
                    lie: rep.lie.map(|l| l.as_str().to_string()),
                });
            }
            doc.sigma_used = one_based(d.sigma_simple.iter().copied());
        }
        InputDocument::Solvable(s) => {
            let d = s.to_datum()?;
            let r = solvable_monoid(&d).map_err(solvable_failure)?;
            doc.character_names = d.codomain.names().to_vec();
            doc.generators = r.generators.iter().map(generator_out).collect();
            doc.sigma_used = one_based(r.sigma.iter().copied());
            doc.solvable = Some(output::SolvableOut {
                pi_map: one_based(r.pi_map.iter().copied()),
                phi: r.phi.iter().map(|p| p.0.clone()).collect(),
                fibers: r
                    .fibers
                    .iter()
                    .map(|f| one_based(f.iter().copied()))
                    .collect(),
                lambda_phi: r.lambda_phi.iter().map(|w| w.0.clone()).collect(),
            });
        }
        InputDocument::Roots(q) => {
            let rs = schema::root_system(&q.group)?;
            doc.roots = Some(output::RootsOut {
                cartan_type: rs.cartan_type().to_string(),
                cartan_matrix: rs.cartan().to_vec(),
                count: rs.num_pos_roots(),
                positive_roots: rs.pos_roots().iter().map(|r| r.0.clone()).collect(),
            });
        }
    }
    Ok(())
}

fn finish(doc: OutputDocument, code: i32, stderr: String, format: Format) -> Outcome {
    let stdout = match format {
        Format::Json => doc.to_json(),
        Format::Text => render_text(&doc),
    };
    Outcome {
        code,
        stdout,
        stderr,
    }
}

/// Runs one command on the bytes of an input document.
pub fn run_on_bytes(opts: &Options, bytes: &[u8]) -> Outcome {
    let hash = hex::encode(Sha256::digest(bytes));
    let mut doc = OutputDocument::new(opts.mode.as_str(), Some(hash));
    let result = std::str::from_utf8(bytes)
        .map_err(|e| {
            Failure::new(
                EXIT_SCHEMA,
                "SCHEMA_ERROR",
                format!("input is not UTF-8: {e}"),
            )
        })
        .and_then(|text| Ok(parse_input(text, opts.mode)?))
        .and_then(|input| fill(&mut doc, &input));
    if let Err(f) = result {
        let msg = format!("error: {}\n", f.diag.message);
        doc.status = Status::Error;
        doc.diagnostics.push(f.diag);
        return finish(doc, f.code, msg, opts.format);
    }
    if doc.status == Status::NonUnique && !opts.allow_nonunique {
        let msg = "error: the Ξ₃ coefficients are not uniquely determined (pass --allow-nonunique to accept)\n".to_string();
        return finish(doc, EXIT_NON_UNIQUE, msg, opts.format);
    }
    if opts.strict {
        let offending: Vec<String> = doc
            .diagnostics
            .iter()
            .filter(|d| d.severity >= Severity::Warning)
            .filter(|d| !(opts.allow_nonunique && d.code == ewm_core::diag::codes::NON_UNIQUE))
            .map(|d| d.code.clone())
            .collect();
        if !offending.is_empty() {
            let message = format!("warnings treated as errors: {}", offending.join(", "));
            doc.diagnostics.push(
                Diagnostic::new(Severity::Error, "STRICT", message.clone())
                    .with_data(json!({ "codes": offending })),
            );
            return finish(doc, EXIT_MATH, format!("error: {message}\n"), opts.format);
        }
    }
    finish(doc, EXIT_OK, String::new(), opts.format)
}

/// Reads the input from `path`, or stdin when `None`, and runs the command.
pub fn run(opts: &Options, path: Option<&Path>) -> Outcome {
    let read = match path {
        Some(p) => std::fs::read(p).map_err(|e| format!("cannot read {}: {e}", p.display())),
        None => {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map(|_| buf)
                .map_err(|e| format!("cannot read stdin: {e}"))
        }
    };
    match read {
        Ok(bytes) => run_on_bytes(opts, &bytes),
        Err(message) => {
            let mut doc = OutputDocument::new(opts.mode.as_str(), None);
            doc.status = Status::Error;
            doc.diagnostics.push(Diagnostic::new(
                Severity::Error,
                "IO_ERROR",
                message.clone(),
            ));
            finish(doc, EXIT_IO, format!("error: {message}\n"), opts.format)
        }
    }
}
