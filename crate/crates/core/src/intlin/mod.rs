//! Exact integer linear algebra over free abelian groups with torsion.
//!
//! Every lattice question in the crate (kernels of restriction maps,
//! preimages, membership, congruence systems) reduces to a single Smith
//! normal form computation on a matrix augmented with relation columns.

mod chars;
mod lattice;
mod matrix;
mod snf;

pub use chars::{CharSpace, CharVec};
pub use lattice::{
    hermite_rows, in_sublattice, in_sublattice_mod, kernel_mod, kernel_with_moduli, lattice_equal,
    moduli_relations, reduce_modulo, solve_mod, solve_with_moduli, Solution,
};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntLinError {
    #[error("modulus {0} is invalid: torsion moduli must be at least 2")]
    InvalidModulus(i64),
    #[error("expected a vector of length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{count} names given for a space of dimension {dim}")]
    NameCount { count: usize, dim: usize },
    #[error("integer {0} does not fit in 64 bits")]
    Overflow(BigInt),
}

/// Widens a machine-integer vector.
pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Narrows a big-integer vector, failing on the first entry that overflows.
pub fn to_small(v: &[BigInt]) -> Result<Vec<i64>, IntLinError> {
    v.iter()
        .map(|x| x.to_i64().ok_or_else(|| IntLinError::Overflow(x.clone())))
        .collect()
}
