use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use ewm_core::chevalley::{AlgVec, ChevalleyAlgebra};
use ewm_core::rootsys::{CartanType, Family, RootSystem, RootVec, WeightVec};

#[test]
fn positive_root_counts_through_rank_8() {
    let closed = |f: Family, n: usize| -> usize {
        match f {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => [36, 63, 120][n - 6],
            Family::F => 24,
            Family::G => 6,
        }
    };
    let mut checked = 0;
    for f in [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ] {
        for n in 1..=8 {
            let Ok(t) = CartanType::simple(f, n) else {
                continue;
            };
            let rs = RootSystem::new(t);
            assert_eq!(rs.num_pos_roots(), closed(f, n), "{f}{n}");
            checked += 1;
        }
    }
    assert_eq!(checked, 8 + 7 + 7 + 6 + 3 + 1 + 1);
}

fn types() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec![
        "A3", "A5", "B3", "C4", "D5", "G2", "F4", "E6", "B2xA2",
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weight_root_round_trip(t in types(), seed in prop::collection::vec(-4i64..=4, 8)) {
        let rs = RootSystem::from_type(t).unwrap();
        let r = RootVec(seed[..rs.rank()].to_vec());
        let w = rs.root_to_weight(&r);
        prop_assert_eq!(rs.weight_to_root_integral(&w), Some(r.clone()));
        let q = rs.weight_to_root(&w);
        prop_assert!(q.iter().zip(&r.0).all(|(a, b)| *a == BigRational::from_integer(BigInt::from(*b))));
    }

    #[test]
    fn inner_product_is_symmetric(t in types(), a in prop::collection::vec(-4i64..=4, 8), b in prop::collection::vec(-4i64..=4, 8)) {
        let rs = RootSystem::from_type(t).unwrap();
        let n = rs.rank();
        let (a, b) = (WeightVec(a[..n].to_vec()), WeightVec(b[..n].to_vec()));
        prop_assert_eq!(rs.inner(&a, &b), rs.inner(&b, &a));
        prop_assert!(rs.inner(&a, &a) >= BigRational::from_integer(BigInt::from(0)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    /// Two roots whose sum is a root: `|N| = p + 1` along the string.
    #[test]
    fn root_string_pairs(t in types(), i in 0usize..1000, j in 0usize..1000) {
        let g = ChevalleyAlgebra::new(RootSystem::from_type(t).unwrap());
        let rs = g.root_system();
        let nroots = 2 * g.num_pos_roots();
        let (x, y) = (i % nroots, j % nroots);
        let cx = g.root_coords(x).to_vec();
        let cy = g.root_coords(y).to_vec();
        let sum: Vec<i64> = cx.iter().zip(&cy).map(|(a, b)| a + b).collect();
        let n = g.structure_constant(x, y);
        if rs.is_root(&sum) {
            let mut p = 0;
            let mut cur: Vec<i64> = cy.iter().zip(&cx).map(|(a, b)| a - b).collect();
            while rs.is_root(&cur) {
                p += 1;
                cur = cur.iter().zip(&cx).map(|(a, b)| a - b).collect();
            }
            prop_assert_eq!(n.abs(), p + 1);
        } else {
            prop_assert_eq!(n, 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn jacobi_random_triples(b3 in any::<bool>(), i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let g = ChevalleyAlgebra::new(RootSystem::from_type(if b3 { "B3" } else { "A5" }).unwrap());
        let n = g.dim();
        let (x, y, z) = (AlgVec::basis(i % n), AlgVec::basis(j % n), AlgVec::basis(k % n));
        let s = g
            .bracket(&x, &g.bracket(&y, &z))
            .add(&g.bracket(&y, &g.bracket(&z, &x)))
            .add(&g.bracket(&z, &g.bracket(&x, &y)));
        prop_assert!(s.is_zero());
    }
}
