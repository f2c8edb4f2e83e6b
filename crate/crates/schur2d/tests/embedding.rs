use std::collections::HashMap;

use groth_core::{enumerate_partitions, particles_to_partition, ModelParams, Rational, Scalar};
use groth_measures::{GrothendieckModel, TiltedEnsemble, WeightFn};
use groth_schur2d::*;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn reference() -> GrothendieckModel<Rational> {
    GrothendieckModel::homogeneous(2, q(1, 2), q(1, 2), q(-1, 1)).unwrap()
}

#[test]
fn single_level_and_vertical_paths() {
    let e = TiltedEnsemble::new(vec![WeightFn::geometric(q(1, 3))], vec![WeightFn::geometric(q(1, 4))], vec![]).unwrap();
    let c = Config2D::new(vec![vec![3]]).unwrap();
    assert_eq!(weight_2d(&e, &c), q(1, 27) * q(1, 64));

    // β = 0 only allows vertical paths, and then the weight is the plain product of determinants
    let m = GrothendieckModel::new(ModelParams::new(vec![q(1, 3), q(1, 4)], vec![q(1, 2), q(1, 5)], vec![q(0, 1)]).unwrap());
    let e = m.ensemble();
    let still = Config2D::new(vec![vec![4, 1], vec![4, 1]]).unwrap();
    let moved = Config2D::new(vec![vec![4, 1], vec![3, 1]]).unwrap();
    let pts = groth_core::ParticleConfig::new(vec![4, 1]).unwrap();
    assert_eq!(weight_2d(&e, &still), e.weight(&pts));
    assert_eq!(weight_2d(&e, &moved), q(0, 1));
    let broken = Config2D::new(vec![vec![4, 1], vec![2, 1]]).unwrap();
    assert_eq!(weight_2d(&e, &broken), q(0, 1));
}

#[test]
fn two_dimensional_normalization_and_marginals() {
    let m = reference();
    let e = m.ensemble();
    let z = e.normalization().unwrap();
    let cap = 30;
    let mut total = q(0, 1);
    let mut marg: HashMap<Vec<u64>, Rational> = HashMap::new();
    for c in enumerate_configs_2d(2, cap) {
        let w = weight_2d(&e, &c);
        total = total + w.clone();
        *marg.entry(c.diagonal()).or_insert_with(|| q(0, 1)) += w;
    }
    assert!((1.0 - (total / z.clone()).magnitude()).abs() < 1e-8);
    // exact for every diagonal with x^1_1 ≤ cap
    for lambda in enumerate_partitions(2, cap - 1) {
        let ell = groth_core::partition_to_particles(&lambda, 2).unwrap().points().to_vec();
        let got = marg.get(&ell).cloned().unwrap_or_else(|| q(0, 1)) / z.clone();
        assert_eq!(got, m.weight(&lambda).unwrap(), "λ = {lambda}");
    }
}

fn normalized_configs(cap: u64) -> Vec<(Config2D, f64)> {
    let m = GrothendieckModel::homogeneous(2, 0.5f64, 0.5, -1.0).unwrap();
    let e = m.ensemble();
    let z = e.normalization().unwrap();
    enumerate_configs_2d(2, cap).map(|c| (weight_2d(&e, &c) / z, c)).map(|(w, c)| (c, w)).collect()
}

#[test]
fn kernel_determinants_match_brute_force() {
    let configs = normalized_configs(30);
    let k = EmKernel::new(reference().ensemble()).unwrap();
    let sites: Vec<(u64, usize)> = (0..=6).flat_map(|a| [(a, 1), (a, 2)]).collect();
    let prob = |pts: &[(u64, usize)]| -> f64 {
        configs.iter().filter(|(c, _)| pts.iter().all(|&(a, t)| c.contains(a, t))).map(|(_, w)| w).sum()
    };
    for (i, &p) in sites.iter().enumerate() {
        let one = k.eval(p.0, p.1, p.0, p.1).magnitude();
        assert!((one - prob(&[p])).abs() < 1e-8, "{p:?}");
        for &r in &sites[i + 1..] {
            let det = k.eval(p.0, p.1, p.0, p.1) * k.eval(r.0, r.1, r.0, r.1)
                - k.eval(p.0, p.1, r.0, r.1) * k.eval(r.0, r.1, p.0, p.1);
            assert!((det.magnitude() - prob(&[p, r])).abs() < 1e-8, "{p:?} {r:?}");
        }
    }
}

#[test]
fn contour_kernel_matches_em_kernel() {
    for beta in [-0.25, -1.0] {
        let m = GrothendieckModel::homogeneous(2, 0.5f64, 0.5, beta).unwrap();
        let em = EmKernel::new(m.ensemble()).unwrap();
        let ck = ContourKernel::new(&m);
        for (a, t, b, s) in [(0, 1, 0, 1), (3, 1, 1, 2), (2, 2, 2, 1), (1, 2, 0, 1), (4, 2, 5, 2), (0, 2, 1, 1)] {
            let qy = KernelQuery::new(a, t, b, s);
            let c = ck.eval(qy, 256).unwrap();
            let exact = em.query(qy);
            assert!((c.re - exact).abs() < 1e-10 && c.im.abs() < 1e-10, "β={beta} {qy:?}: {c} vs {exact}");
        }
    }
    let m = GrothendieckModel::homogeneous(2, 0.5f64, 0.5, -0.25).unwrap();
    let ck = ContourKernel::new(&m);
    let qy = KernelQuery::new(0, 1, 0, 1);
    assert!((ck.eval(qy, 4096).unwrap() - ck.eval(qy, 2048).unwrap()).norm() < 1e-12);
}

#[test]
fn full_marginals_and_the_naive_formula() {
    let m = reference();
    let k = EmKernel::new(m.ensemble()).unwrap();
    let mut naive_differs = false;
    for l1 in 1..7u64 {
        for l2 in 0..l1 {
            let lambda = particles_to_partition(&[l1, l2]).unwrap();
            let w = m.weight(&lambda).unwrap();
            let spec = CorrelationSpec::new(vec![1, 2], vec![l1, l2]).unwrap();
            assert_eq!(marginal_probability(&k, &spec).unwrap(), w, "ℓ = ({l1},{l2})");
            let naive = naive_kernel_measure(&k, &[l1, l2]);
            if l1 - l2 >= 2 {
                assert_eq!(naive, w);
            } else if naive != w {
                naive_differs = true;
            }
        }
    }
    assert!(naive_differs, "the naive determinant should fail at some gap-one configuration");
}

#[test]
fn one_level_marginal_against_weight_sums() {
    let m = GrothendieckModel::new(
        ModelParams::new(vec![q(1, 3), q(1, 4), q(1, 2)], vec![q(1, 2), q(1, 5), q(1, 3)], vec![q(-1, 2), q(-2, 1)]).unwrap(),
    );
    let k = EmKernel::new(m.ensemble()).unwrap();
    // λ_3 = 0, i.e. ℓ_3 = 0
    let p = marginal_probability(&k, &CorrelationSpec::new(vec![3], vec![0]).unwrap()).unwrap();
    let sum: f64 = enumerate_partitions(2, 40).map(|mu| m.weight(&mu).unwrap().magnitude()).sum();
    assert!((p.magnitude() - sum).abs() < 1e-10, "{} vs {sum}", p.magnitude());
    // ℓ_1 = 4: summed over the rest
    let p = marginal_probability(&k, &CorrelationSpec::new(vec![1], vec![4]).unwrap()).unwrap();
    let sum = enumerate_partitions(3, 2).filter(|l| l.part(1) == 2).fold(q(0, 1), |acc, l| acc + m.weight(&l).unwrap());
    assert_eq!(p, sum);
    assert_eq!(marginal_probability(&k, &CorrelationSpec::empty()).unwrap(), q(1, 1));
}

#[test]
fn reference_one_point_values() {
    let m = reference();
    let k = EmKernel::new(m.ensemble()).unwrap();
    assert_eq!(correlation_function(&k, &[0]).unwrap(), q(15, 16));
    assert_eq!(correlation_function(&k, &[]).unwrap(), q(1, 1));
    assert_eq!(correlation_function(&k, &[0, 1, 2]).unwrap(), q(0, 1));
    assert!(matches!(one_point_closed_form(&m, 4), Err(Schur2dError::UnsupportedIndex(4))));
}

fn triple() -> impl Strategy<Value = (Rational, Rational, Rational)> {
    (1i64..6, 2i64..9, 1i64..6, 2i64..9, -9i64..4, 1i64..5)
        .prop_map(|(xn, xd, yn, yd, bn, bd)| (q(xn, xd), q(yn, yd), q(bn, bd)))
        .prop_filter("|xy| < 1, 1 − xβ ≠ 0", |(x, y, b)| {
            (x.clone() * y.clone()).magnitude() < 1.0 && x.clone() * b.clone() != q(1, 1)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5))]

    #[test]
    fn closed_form_correlations((x, y, b) in triple()) {
        let m = GrothendieckModel::homogeneous(2, x, y, b).unwrap();
        let k = EmKernel::new(m.ensemble()).unwrap();
        for i in 0..4u64 {
            prop_assert_eq!(correlation_function(&k, &[i]).unwrap(), one_point_closed_form(&m, i).unwrap());
            for j in 0..i {
                prop_assert_eq!(correlation_function(&k, &[i, j]).unwrap(), two_point_closed_form(&m, i, j).unwrap());
            }
        }
    }
}
