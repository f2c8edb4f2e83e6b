use groth_core::{enumerate_partitions, partition_to_particles, ModelParams, Partition, Rational, Scalar};
use groth_measures::{schur_polynomial, schur_weight, GrothendieckModel, MeasureError};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn model(xs: &[(i64, i64)], ys: &[(i64, i64)], bs: &[(i64, i64)]) -> GrothendieckModel<Rational> {
    let v = |s: &[(i64, i64)]| s.iter().map(|&(n, d)| q(n, d)).collect::<Vec<_>>();
    GrothendieckModel::new(ModelParams::new(v(xs), v(ys), v(bs)).unwrap())
}

fn distinct_model(n: usize) -> GrothendieckModel<Rational> {
    let xs = [(1, 3), (1, 4), (2, 7)];
    let ys = [(1, 2), (1, 5), (3, 8)];
    let bs = [(-1, 2), (-2, 3)];
    model(&xs[..n], &ys[..n], &bs[..n - 1])
}

/// The N=2 homogeneous weight of `λ = (i − 1, j)`, written out by hand.
fn two_point_weight(x: &Rational, y: &Rational, b: &Rational, i: i64, j: i64) -> Rational {
    let one = q(1, 1);
    let pre = (one.clone() - x * y).powu(4) / (one.clone() - x * b).powu(2);
    let xpow = x.powu((i + j - 1) as u64);
    // y^{i+j−2} with i + j − 2 = −1 only at (1, 0)
    let ypow = if i + j >= 2 { y.powu((i + j - 2) as u64) } else { one.clone() / y.clone() };
    let f1 = b * x * q(i - j - 1, 1) - q(i - j, 1);
    let f2 = q(j - i, 1) * (y - b) - b.clone();
    pre * xpow * ypow * f1 * f2
}

#[test]
fn consistency_with_tilted_ensemble() {
    for n in 1..=3 {
        let m = distinct_model(n);
        let e = m.ensemble();
        let z = e.normalization().unwrap();
        assert_eq!(z, m.cauchy_normalization(), "N={n}");
        for lambda in enumerate_partitions(n, if n == 3 { 3 } else { 5 }) {
            let x = partition_to_particles(&lambda, n).unwrap();
            assert_eq!(m.weight(&lambda).unwrap(), e.weight(&x) / z.clone(), "N={n}, λ={lambda}");
        }
    }
}

#[test]
fn homogeneous_weights_match_hand_formula() {
    for (x, y, b) in [(q(1, 2), q(1, 2), q(-1, 1)), (q(1, 3), q(1, 5), q(-6, 1)), (q(2, 3), q(1, 7), q(1, 9))] {
        let m = GrothendieckModel::homogeneous(2, x.clone(), y.clone(), b.clone()).unwrap();
        let e = m.ensemble();
        let z = e.normalization().unwrap();
        for i in 1..6 {
            for j in 0..i {
                let lambda = Partition::new(vec![(i - 1) as u64, j as u64]).unwrap();
                let w = m.weight(&lambda).unwrap();
                assert_eq!(w, two_point_weight(&x, &y, &b, i, j), "ℓ = ({i},{j})");
                let pts = partition_to_particles(&lambda, 2).unwrap();
                assert_eq!(w, e.weight(&pts) / z.clone());
            }
        }
    }
}

#[test]
fn empty_partition_polynomials_are_one() {
    let m = GrothendieckModel::homogeneous(2, q(1, 3), q(2, 5), q(-3, 1)).unwrap();
    assert_eq!(m.g(&Partition::empty()).unwrap(), q(1, 1));
    assert_eq!(m.gbar(&Partition::empty()).unwrap(), q(1, 1));
    let d = model(&[(1, 3), (1, 4)], &[(1, 2), (1, 5)], &[(-2, 1)]);
    assert_eq!(d.gbar(&Partition::empty()).unwrap(), q(1, 1));
}

#[test]
fn confluent_value_is_the_limit_of_distinct_values() {
    let lambda = Partition::new(vec![3, 1, 1]).unwrap();
    let h = GrothendieckModel::homogeneous(3, 0.3f64, 0.6, -0.7).unwrap();
    let eps = 1e-5;
    let near = GrothendieckModel::new(
        ModelParams::new(vec![0.3, 0.3 + eps, 0.3 - eps], vec![0.6, 0.6 + eps, 0.6 + 2.0 * eps], vec![-0.7, -0.7])
            .unwrap(),
    );
    for (a, b) in [(h.g(&lambda).unwrap(), near.g(&lambda).unwrap()), (h.gbar(&lambda).unwrap(), near.gbar(&lambda).unwrap())]
    {
        assert!((a - b).abs() < 1e-3 * a.abs().max(1.0), "{a} vs {b}");
    }
}

#[test]
fn zero_y_is_fine_directly_but_not_through_reversal() {
    let m = model(&[(1, 3), (1, 4)], &[(0, 1), (1, 5)], &[(-2, 1)]);
    let lambda = Partition::new(vec![2, 1]).unwrap();
    assert!(m.gbar(&lambda).is_ok());
    assert_eq!(m.gbar_via_reversal(&lambda), Err(MeasureError::ZeroParameter));
}

#[test]
fn too_many_parts_is_an_error() {
    let m = distinct_model(2);
    assert!(matches!(m.weight(&Partition::new(vec![1, 1, 1]).unwrap()), Err(MeasureError::Core(_))));
}

#[test]
fn cauchy_identity_at_reference_parameters() {
    for (x, y, b) in [(0.5f64, 0.5, -1.0), (1.0 / 3.0, 0.2, -6.0)] {
        let m = GrothendieckModel::homogeneous(2, x, y, b).unwrap();
        let c = m.cauchy_check(1e-12, 8, 512).unwrap();
        assert!((c.sum - 1.0).abs() < 1e-8, "({x},{y},{b}): {} at cap {}", c.sum, c.max_part);
    }
    let exact = GrothendieckModel::homogeneous(2, q(1, 2), q(1, 2), q(-1, 1)).unwrap();
    let s = exact.partial_sum(40).unwrap();
    assert!((1.0 - s.magnitude()).abs() < 1e-8);
}

#[test]
fn partial_sums_increase_in_strict_regime() {
    for n in 1..=3 {
        let m = distinct_model(n);
        let mut prev = q(0, 1);
        for cap in 0..4 {
            let s = m.partial_sum(cap).unwrap();
            assert!(s > prev && s < q(1, 1), "N={n}, cap={cap}");
            prev = s;
        }
    }
}

fn small_rational(lo: i64, hi: i64) -> impl Strategy<Value = Rational> {
    (lo..=hi, 1i64..=9).prop_map(|(n, d)| q(n, d))
}

fn partition_strategy(n: usize, max: u64) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=max, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn params_strategy(n: usize) -> impl Strategy<Value = ModelParams<Rational>> {
    (
        proptest::collection::vec(small_rational(1, 8), n),
        proptest::collection::vec(small_rational(1, 8), n),
        proptest::collection::vec(small_rational(-9, 9), n - 1),
    )
        .prop_filter_map("|x y| < 1", |(xs, ys, bs)| ModelParams::new(xs, ys, bs).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn reversal_identity(p in params_strategy(3), lambda in partition_strategy(3, 4)) {
        let m = GrothendieckModel::new(p);
        prop_assert_eq!(m.gbar(&lambda).unwrap(), m.gbar_via_reversal(&lambda).unwrap());
    }

    #[test]
    fn index_shift(p in params_strategy(3), lambda in partition_strategy(3, 4)) {
        let m = GrothendieckModel::new(p);
        let prod = m.params().xs().iter().fold(q(1, 1), |a, x| a * x.clone());
        prop_assert_eq!(m.g(&lambda.add_column(3).unwrap()).unwrap(), prod * m.g(&lambda).unwrap());
    }

    #[test]
    fn beta_zero_is_schur(xs in proptest::collection::vec(small_rational(1, 8), 3),
                          ys in proptest::collection::vec(small_rational(1, 8), 3),
                          lambda in partition_strategy(3, 4)) {
        let Ok(p) = ModelParams::new(xs.clone(), ys.clone(), vec![q(0, 1); 2]) else { return Ok(()) };
        let m = GrothendieckModel::new(p);
        prop_assert_eq!(m.g(&lambda).unwrap(), schur_polynomial(&lambda, &xs));
        prop_assert_eq!(m.weight(&lambda).unwrap(), schur_weight(&lambda, &xs, &ys));
    }

    #[test]
    fn extended_regime_is_nonnegative(xs in proptest::collection::vec(small_rational(1, 6), 3),
                                      ys in proptest::collection::vec(small_rational(1, 6), 3),
                                      frac in proptest::collection::vec(0i64..=8, 2),
                                      lambda in partition_strategy(3, 8)) {
        // β_r ∈ [0, min(x_i⁻¹, y_j)], sampled as a fraction of the bound
        let bound = xs.iter().map(|x| q(1, 1) / x.clone()).chain(ys.iter().cloned()).min().unwrap();
        let betas = frac.iter().map(|&f| bound.clone() * q(f, 8)).collect();
        let Ok(p) = ModelParams::new(xs, ys, betas) else { return Ok(()) };
        let w = GrothendieckModel::new(p).weight(&lambda).unwrap();
        prop_assert!(w >= q(0, 1));
    }
}
