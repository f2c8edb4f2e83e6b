use groth_core::{Partition, Scalar};
use groth_measures::GrothendieckModel;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{dual_rsk_insert_word, rsk_insert_word, SamplerError, Tableau};

/// Seed and stream of a `ChaCha8Rng`; the same pair reproduces the same sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RngSpec {
    pub seed: u64,
    pub stream_id: u64,
}

impl RngSpec {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        Self { seed, stream_id }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(self.stream_id);
        r
    }
}

/// Homogeneous parameters of the sampler.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SamplerParams {
    pub n: usize,
    pub x: f64,
    pub y: f64,
    pub beta: f64,
}

impl SamplerParams {
    pub fn new(n: usize, x: f64, y: f64, beta: f64) -> Result<Self, SamplerError> {
        let xy = x * y;
        if n == 0 || !(xy > 0.0 && xy < 1.0) || x < 0.0 || beta > 0.0 || !beta.is_finite() {
            return Err(SamplerError::InvalidRegime(format!("need N ≥ 1, 0 < xy < 1, x > 0, β ≤ 0; got N={n}, x={x}, y={y}, β={beta}")));
        }
        Ok(Self { n, x, y, beta })
    }

    pub fn from_model<T: Scalar>(m: &GrothendieckModel<T>) -> Result<Self, SamplerError> {
        let p = m.params();
        if !p.is_homogeneous() {
            return Err(SamplerError::NotHomogeneous);
        }
        let beta = p.betas().first().map_or(0.0, |b| b.to_c64().re);
        Self::new(p.n(), p.xs()[0].to_c64().re, p.ys()[0].to_c64().re, beta)
    }

    /// `P(η = 1) = −βx/(1 − βx)`.
    pub fn bernoulli(&self) -> f64 {
        -self.beta * self.x / (1.0 - self.beta * self.x)
    }

    /// `E|μ^N| = N² xy/(1 − xy)`.
    pub fn mean_size_last(&self) -> f64 {
        let n = self.n as f64;
        n * n * self.x * self.y / (1.0 - self.x * self.y)
    }

    /// `E|μ^1|`: each of the `N(N − 1)` Bernoulli entries adds one box.
    pub fn mean_size_first(&self) -> f64 {
        let n = self.n as f64;
        self.mean_size_last() + n * (n - 1.0) * self.bernoulli()
    }
}

/// `P(ξ = k) = (1 − q) q^k` by inverting the distribution function.
fn geometric(rng: &mut ChaCha8Rng, q: f64) -> u64 {
    let u: f64 = 1.0 - rng.gen::<f64>();
    (u.ln() / q.ln()).floor() as u64
}

/// `(μ^1, …, μ^N)`, where `μ^{N−s+1}` is the shape after `N + s − 1` insertions.
pub fn sample_schur_process(p: &SamplerParams, spec: RngSpec) -> Vec<Partition> {
    let mut rng = spec.rng();
    let n = p.n;
    let q = p.x * p.y;
    let mut t = Tableau::new(n as u32);
    for _ in 0..n {
        let word: Vec<u64> = (0..n).map(|_| geometric(&mut rng, q)).collect();
        rsk_insert_word(&mut t, &word);
        debug_assert!(t.is_semistandard());
    }
    let mut mus = vec![t.shape()];
    let b = p.bernoulli();
    for _ in 1..n {
        let bits: Vec<bool> = (0..n).map(|_| rng.gen::<f64>() < b).collect();
        dual_rsk_insert_word(&mut t, &bits);
        debug_assert!(t.is_semistandard());
        mus.push(t.shape());
    }
    mus.reverse();
    mus
}

/// `λ_m = μ^m_m`.
pub fn grothendieck_from_process(mus: &[Partition]) -> Partition {
    Partition::new(mus.iter().enumerate().map(|(i, mu)| mu.part(i + 1)).collect()).expect("diagonal of an interlacing array is decreasing")
}

pub fn sample_grothendieck(p: &SamplerParams, spec: RngSpec) -> Partition {
    grothendieck_from_process(&sample_schur_process(p, spec))
}

/// `count` independent samples on streams `0..count`, in stream order.
pub fn sample_many(p: &SamplerParams, seed: u64, count: usize) -> Vec<Partition> {
    (0..count as u64).into_par_iter().map(|s| sample_grothendieck(p, RngSpec::new(seed, s))).collect()
}

/// Like [`sample_many`] but keeps the whole process.
pub fn sample_many_processes(p: &SamplerParams, seed: u64, count: usize) -> Vec<Vec<Partition>> {
    (0..count as u64).into_par_iter().map(|s| sample_schur_process(p, RngSpec::new(seed, s))).collect()
}
