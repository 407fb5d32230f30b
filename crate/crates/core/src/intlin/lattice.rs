use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{smith_normal_form, IntMatrix};

/// Solution set `particular + span_Z(homogeneous)` of a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<BigInt>,
    /// Row-style Hermite basis of the homogeneous solutions.
    pub homogeneous: Vec<Vec<BigInt>>,
}

impl Solution {
    pub fn is_unique(&self) -> bool {
        self.homogeneous.is_empty()
    }
}

/// Row-style Hermite normal form of the lattice spanned by `gens`.
///
/// The returned rows are linearly independent, have strictly increasing
/// pivot columns with positive pivots, and every entry above a pivot lies in
/// `[0, pivot)`. Two generating sets span the same lattice iff their Hermite
/// forms coincide.
pub fn hermite_rows(gens: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = gens
        .iter()
        .filter(|g| g.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    for r in &rows {
        assert_eq!(r.len(), ncols, "generator length mismatch");
    }
    let mut r = 0;
    for col in 0..ncols {
        loop {
            let nonzero: Vec<usize> = (r..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .collect();
            if nonzero.len() <= 1 {
                if let Some(&i) = nonzero.first() {
                    rows.swap(r, i);
                }
                break;
            }
            let piv = *nonzero
                .iter()
                .min_by(|&&a, &&b| rows[a][col].abs().cmp(&rows[b][col].abs()))
                .unwrap();
            rows.swap(r, piv);
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                let pivot_row = rows[r].clone();
                axpy(&mut rows[i], &-q, &pivot_row);
            }
        }
        if r < rows.len() && !rows[r][col].is_zero() {
            if rows[r][col].is_negative() {
                for x in rows[r].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            let pivot_row = rows[r].clone();
            for above in rows.iter_mut().take(r) {
                let q = above[col].div_floor(&pivot_row[col]);
                axpy(above, &-q, &pivot_row);
            }
            r += 1;
        }
    }
    rows.truncate(r);
    rows
}

/// Reduces `v` modulo the lattice with Hermite basis `hnf` to its canonical
/// coset representative.
pub fn reduce_modulo(v: &[BigInt], hnf: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut out = v.to_vec();
    for row in hnf {
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let q = out[p].div_floor(&row[p]);
        axpy(&mut out, &-q, row);
    }
    out
}

fn axpy(y: &mut [BigInt], k: &BigInt, x: &[BigInt]) {
    if k.is_zero() {
        return;
    }
    for (a, b) in y.iter_mut().zip(x) {
        *a += k * b;
    }
}

/// Integer vectors `x` with `a x` in the column span of `relations`.
///
/// Returned as a Hermite row basis.
pub fn kernel_mod(a: &IntMatrix, relations: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n = a.cols();
    let aug = a.hcat(relations);
    let s = smith_normal_form(&aug);
    let gens: Vec<Vec<BigInt>> = (s.rank..aug.cols())
        .map(|j| s.v.column(j).into_iter().take(n).collect())
        .collect();
    hermite_rows(&gens, n)
}

/// All integer `x` with `a x = b` modulo the column span of `relations`.
pub fn solve_mod(a: &IntMatrix, relations: &IntMatrix, b: &[BigInt]) -> Option<Solution> {
    assert_eq!(b.len(), a.rows(), "right-hand side length mismatch");
    let n = a.cols();
    let aug = a.hcat(relations);
    let s = smith_normal_form(&aug);
    let c = s.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); aug.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < s.rank {
            let (q, r) = ci.div_rem(s.d.get(i, i));
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    let x: Vec<BigInt> = s.v.mul_vec(&y).into_iter().take(n).collect();
    let homogeneous: Vec<Vec<BigInt>> = {
        let gens: Vec<Vec<BigInt>> = (s.rank..aug.cols())
            .map(|j| s.v.column(j).into_iter().take(n).collect())
            .collect();
        hermite_rows(&gens, n)
    };
    Some(Solution {
        particular: reduce_modulo(&x, &homogeneous),
        homogeneous,
    })
}

/// Relation columns `m_i e_i` for every non-zero modulus; a zero modulus
/// marks an exact (free) row.
pub fn moduli_relations(moduli: &[i64]) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = moduli
        .iter()
        .enumerate()
        .filter(|(_, &m)| m != 0)
        .map(|(i, &m)| {
            let mut c = vec![BigInt::zero(); moduli.len()];
            c[i] = BigInt::from(m);
            c
        })
        .collect();
    IntMatrix::from_columns(moduli.len(), &cols)
}

/// Kernel of `a` where row `i` is read modulo `moduli[i]` (exact when 0).
pub fn kernel_with_moduli(a: &IntMatrix, moduli: &[i64]) -> Vec<Vec<BigInt>> {
    assert_eq!(moduli.len(), a.rows(), "one modulus per row");
    kernel_mod(a, &moduli_relations(moduli))
}

/// Solves `a x = b` where row `i` is read modulo `moduli[i]` (exact when 0).
pub fn solve_with_moduli(a: &IntMatrix, moduli: &[i64], b: &[BigInt]) -> Option<Solution> {
    assert_eq!(moduli.len(), a.rows(), "one modulus per row");
    solve_mod(a, &moduli_relations(moduli), b)
}

/// Whether `v` lies in the span of `basis` inside the group presented by
/// the relation columns.
pub fn in_sublattice_mod(v: &[BigInt], basis: &[Vec<BigInt>], relations: &IntMatrix) -> bool {
    let a = IntMatrix::from_columns(v.len(), basis);
    solve_mod(&a, relations, v).is_some()
}

/// Whether `v` lies in `span_Z(basis)` inside `Z^r x prod Z/m_i`.
pub fn in_sublattice(v: &[BigInt], basis: &[Vec<BigInt>], moduli: &[i64]) -> bool {
    in_sublattice_mod(v, basis, &moduli_relations(moduli))
}

/// Whether two generating sets span the same subgroup.
pub fn lattice_equal(b1: &[Vec<BigInt>], b2: &[Vec<BigInt>], moduli: &[i64]) -> bool {
    b1.iter().all(|v| in_sublattice(v, b2, moduli))
        && b2.iter().all(|v| in_sublattice(v, b1, moduli))
}
