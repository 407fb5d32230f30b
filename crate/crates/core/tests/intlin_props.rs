use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use ewm_core::intlin::{in_sublattice, smith_normal_form, solve_with_moduli, to_big, IntMatrix};

/// Laplace expansion; independent of the library determinant.
fn det(m: &[Vec<i64>]) -> i128 {
    if m.is_empty() {
        return 1;
    }
    let n = m.len();
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] as i128 * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// k-th determinantal divisor: gcd of all k x k minors.
fn det_divisor(a: &[Vec<i64>], k: usize) -> i128 {
    let rows = subsets(a.len(), k);
    let cols = subsets(a[0].len(), k);
    let mut g: i128 = 0;
    for r in &rows {
        for c in &cols {
            let sub: Vec<Vec<i64>> = r
                .iter()
                .map(|&i| c.iter().map(|&j| a[i][j]).collect())
                .collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}

fn matrix(n: usize, m: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-9i64..=9, m), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_contract(a in matrix(5, 5)) {
        let am = IntMatrix::from_rows(&a);
        let s = smith_normal_form(&am);
        prop_assert_eq!(s.u.mul(&am).mul(&s.v), s.d.clone());
        prop_assert!(s.u.determinant().abs().is_one());
        prop_assert!(s.v.determinant().abs().is_one());
        prop_assert!(s.d.is_smith_diagonal());
        // d_1 ... d_k equals the k-th determinantal divisor.
        let mut prod = BigInt::one();
        for k in 1..=5 {
            let dk = if k <= s.rank { s.d.get(k - 1, k - 1).clone() } else { BigInt::zero() };
            prod *= dk;
            prop_assert_eq!(prod.clone(), BigInt::from(det_divisor(&a, k)));
        }
    }
}

/// Membership in `span(b1, b2)` inside `Z^2 x Z/m` by exhaustive search.
/// The free part of the basis is invertible, so coefficients are bounded by
/// Cramer's rule and the box below is exhaustive.
fn brute_member(v: &[i64], b: &[Vec<i64>], m: i64) -> bool {
    let r = 60;
    for c1 in -r..=r {
        for c2 in -r..=r {
            let w: Vec<i64> = (0..3).map(|i| c1 * b[0][i] + c2 * b[1][i]).collect();
            if w[0] == v[0] && w[1] == v[1] && (w[2] - v[2]).rem_euclid(m) == 0 {
                return true;
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sublattice_matches_brute_force(
        b in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 2),
        v in prop::collection::vec(-6i64..=6, 3),
        m in 2i64..=4,
    ) {
        prop_assume!(b[0][0] * b[1][1] - b[0][1] * b[1][0] != 0);
        let basis: Vec<Vec<BigInt>> = b.iter().map(|x| to_big(x)).collect();
        prop_assert_eq!(in_sublattice(&to_big(&v), &basis, &[0, 0, m]), brute_member(&v, &b, m));
    }

    #[test]
    fn solve_substitution(a in matrix(3, 4), x in prop::collection::vec(-5i64..=5, 4)) {
        let am = IntMatrix::from_rows(&a);
        let b = am.mul_vec(&to_big(&x));
        let s = solve_with_moduli(&am, &[0, 0, 0], &b).expect("consistent by construction");
        prop_assert_eq!(am.mul_vec(&s.particular), b);
        for h in &s.homogeneous {
            prop_assert!(am.mul_vec(h).iter().all(|c| c.is_zero()));
        }
    }
}
