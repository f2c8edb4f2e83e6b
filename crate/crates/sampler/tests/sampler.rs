use std::collections::HashMap;

use groth_core::{enumerate_partitions, Partition};
use groth_measures::{schur_polynomial, schur_weight, GrothendieckModel};
use groth_sampler::*;
use proptest::prelude::*;

fn histogram(samples: &[Partition]) -> HashMap<Vec<u64>, f64> {
    let mut h = HashMap::new();
    for s in samples {
        *h.entry(s.parts().to_vec()).or_insert(0.0) += 1.0 / samples.len() as f64;
    }
    h
}

/// Total variation over the partitions with `λ_1 ≤ cap`, plus the exact mass beyond it.
fn tv(h: &HashMap<Vec<u64>, f64>, exact: impl Fn(&Partition) -> f64, cap: u64) -> f64 {
    let mut seen = 0.0;
    let mut d = 0.0;
    for lambda in enumerate_partitions(2, cap) {
        let e = exact(&lambda);
        seen += e;
        d += (h.get(lambda.parts()).copied().unwrap_or(0.0) - e).abs();
    }
    let outside: f64 = h.iter().filter(|(k, _)| k.first().copied().unwrap_or(0) > cap).map(|(_, v)| v).sum();
    (d + outside + (1.0 - seen)) / 2.0
}

#[test]
fn grothendieck_law_at_the_reference_point() {
    let m = GrothendieckModel::homogeneous(2, 0.5f64, 0.5, -1.0).unwrap();
    let p = SamplerParams::from_model(&m).unwrap();
    let samples = sample_many(&p, 1, 100_000);
    let d = tv(&histogram(&samples), |l| m.weight(l).unwrap(), 40);
    assert!(d < 0.02, "TV = {d}");
}

#[test]
fn stage_one_is_the_schur_measure() {
    let p = SamplerParams::new(2, 0.5, 0.6, 0.0).unwrap();
    let samples = sample_many(&p, 2, 50_000);
    let d = tv(&histogram(&samples), |l| schur_weight(l, &[0.5, 0.5], &[0.6, 0.6]), 40);
    assert!(d < 0.02, "TV = {d}");
}

/// `P(μ^1 = μ) ∝ s_μ(x, x) Σ_ν (−β)^{|μ/ν|} s_ν(y, y)` over `ν` with `μ/ν` a vertical strip.
#[test]
fn first_level_after_one_dual_step() {
    let (x, y, beta) = (0.5, 0.4, -1.5);
    let p = SamplerParams::new(2, x, y, beta).unwrap();
    let exact = |mu: &Partition| {
        let pre = (1.0 - x * y).powi(4) / (1.0 - x * beta).powi(2);
        let inner: f64 = enumerate_partitions(2, mu.part(1))
            .filter(|nu| mu.vertical_strip_over(nu))
            .map(|nu| (-beta).powi((mu.size() - nu.size()) as i32) * schur_polynomial(&nu, &[y, y]))
            .sum();
        pre * schur_polynomial(mu, &[x, x]) * inner
    };
    let firsts: Vec<Partition> = sample_many_processes(&p, 3, 50_000).into_iter().map(|mus| mus[0].clone()).collect();
    let d = tv(&histogram(&firsts), exact, 40);
    assert!(d < 0.02, "TV = {d}");
}

#[test]
fn expected_box_counts() {
    let p = SamplerParams::new(10, 0.25, 0.25, -1.0).unwrap();
    let runs = sample_many_processes(&p, 4, 4000);
    let mean = |lvl: usize| runs.iter().map(|m| m[lvl].size() as f64).sum::<f64>() / runs.len() as f64;
    assert!((mean(9) / p.mean_size_last() - 1.0).abs() < 0.05, "{} vs {}", mean(9), p.mean_size_last());
    assert!((mean(0) / p.mean_size_first() - 1.0).abs() < 0.05, "{} vs {}", mean(0), p.mean_size_first());
}

#[test]
fn zero_beta_skips_the_dual_stage() {
    let p = SamplerParams::new(4, 0.5, 0.5, 0.0).unwrap();
    let mus = sample_schur_process(&p, RngSpec::new(9, 0));
    assert!(mus.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(sample_grothendieck(&p, RngSpec::new(9, 0)), mus[0]);
}

#[test]
fn rejects_bad_regimes() {
    assert!(matches!(SamplerParams::new(2, 0.5, 0.5, 1.0), Err(SamplerError::InvalidRegime(_))));
    assert!(matches!(SamplerParams::new(2, 2.0, 0.5, -1.0), Err(SamplerError::InvalidRegime(_))));
    let inhomogeneous = GrothendieckModel::new(groth_core::ModelParams::new(vec![0.1, 0.2], vec![0.1, 0.1], vec![-1.0]).unwrap());
    assert!(matches!(SamplerParams::from_model(&inhomogeneous), Err(SamplerError::NotHomogeneous)));
}

#[test]
fn staircase_stretch_at_large_negative_beta() {
    // with P(η = 1) ≈ 0.89 most consecutive parts differ by exactly one
    let p = SamplerParams::new(50, 1.0 / 3.0, 0.2, -25.0).unwrap();
    let lambda = sample_grothendieck(&p, RngSpec::new(7, 0));
    let steps = lambda.padded(50).windows(2).filter(|w| w[0] == w[1] + 1).count();
    assert!(steps >= 20, "{lambda}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn structure_and_determinism(seed in any::<u64>(), stream in 0u64..1000, n in 1usize..7, beta in -4.0f64..=0.0) {
        let p = SamplerParams::new(n, 0.6, 0.7, beta).unwrap();
        let spec = RngSpec::new(seed, stream);
        let mus = sample_schur_process(&p, spec);
        prop_assert_eq!(&mus, &sample_schur_process(&p, spec));
        prop_assert_eq!(mus.len(), n);
        for w in mus.windows(2) {
            prop_assert!(w[0].vertical_strip_over(&w[1]));
        }
        prop_assert!(mus.iter().all(|m| m.len() <= n));
        let lambda = sample_grothendieck(&p, spec);
        prop_assert!(lambda.len() <= n);
        for (i, mu) in mus.iter().enumerate() {
            prop_assert_eq!(lambda.part(i + 1), mu.part(i + 1));
        }
    }

    #[test]
    fn insertion_keeps_tableaux_semistandard(words in prop::collection::vec(prop::collection::vec(0u64..3, 4), 1..6),
                                             duals in prop::collection::vec(prop::collection::vec(any::<bool>(), 4), 0..6)) {
        let mut t = Tableau::new(4);
        for w in &words {
            let before = t.shape();
            rsk_insert_word(&mut t, w);
            prop_assert!(t.is_semistandard());
            prop_assert!(t.shape().horizontal_strip_over(&before));
        }
        for d in &duals {
            let before = t.shape();
            dual_rsk_insert_word(&mut t, d);
            prop_assert!(t.is_semistandard());
            prop_assert!(t.shape().vertical_strip_over(&before));
            prop_assert_eq!(t.shape().size(), before.size() + d.iter().filter(|b| **b).count() as u64);
        }
    }
}
