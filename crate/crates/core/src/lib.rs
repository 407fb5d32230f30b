//! Extended weight monoids of spherical homogeneous spaces.

pub mod chevalley;
pub mod diag;
pub mod general;
pub mod intlin;
pub mod rootsys;
pub mod samples;
pub mod solvable;

pub use chevalley::{AlgVec, ChevalleyAlgebra, ChevalleyError, Subspace};
pub use diag::{Diagnostic, Severity};
pub use general::{
    compute_monoid, Biweight, GeneralDatum, GeneralError, LieData, LieVerdict, MonoidResult,
    NonUniqueReport, Origin, Xi2Prime, Xi3Prime,
};
pub use intlin::{CharSpace, CharVec, IntLinError, IntMatrix};
pub use rootsys::{CartanType, Family, RootSysError, RootSystem, RootVec, WeightVec};
pub use solvable::{solvable_monoid, SolvableDatum, SolvableError, SolvableResult};
