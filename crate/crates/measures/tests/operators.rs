use std::collections::BTreeMap;

use groth_core::{Rational, Scalar};
use groth_measures::{apply_d, apply_d_dagger, WeightFn};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn finite_support() -> impl Strategy<Value = WeightFn<Rational>> {
    proptest::collection::btree_map(0u64..12, (-20i64..20, 1i64..6), 0..8)
        .prop_map(|m| WeightFn::FiniteSupport(m.into_iter().map(|(k, (n, d))| (k, q(n, d))).collect::<BTreeMap<_, _>>()))
}

#[test]
fn geometric_eigenvalues() {
    let (x, b) = (q(2, 7), q(-3, 2));
    let f = WeightFn::geometric(x.clone());
    for k in 0..6u64 {
        assert_eq!(apply_d(&f, &b, k), x.powu(k) * (q(1, 1) - b.clone() * x.clone()));
        let dag = apply_d_dagger(&f, &b, k);
        if k == 0 {
            assert_eq!(dag, q(1, 1));
        } else {
            assert_eq!(dag, x.powu(k) * (q(1, 1) - b.clone() / x.clone()));
        }
    }
    let delta = WeightFn::delta(0);
    assert_eq!(apply_d(&delta, &q(1, 1), 0), q(1, 1));
}

proptest! {
    #[test]
    fn summation_by_parts(f in finite_support(), g in finite_support(), a in 0u64..6, len in 0u64..10,
                          bn in -5i64..5, bd in 1i64..4) {
        let b = q(bn, bd);
        let hi = a + len;
        let lhs = (a..=hi).fold(q(0, 1), |acc, k| {
            acc + f.eval(k as i64) * apply_d_dagger(&g, &b, k) - g.eval(k as i64) * apply_d(&f, &b, k)
        });
        let mut rhs = b.clone() * g.eval(hi as i64) * f.eval(hi as i64 + 1);
        if a >= 1 {
            rhs = rhs - b.clone() * f.eval(a as i64) * g.eval(a as i64 - 1);
        }
        prop_assert_eq!(lhs, rhs);
    }
}
