use groth_core::{elementary_symmetric, Matrix, Scalar};
use groth_measures::TiltedEnsemble;

use crate::Schur2dError;

/// Kernel arguments `(a, t; b, s)`: positions `a, b ≥ 0`, levels `t, s ∈ 1..=N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KernelQuery {
    pub a: u64,
    pub t: usize,
    pub b: u64,
    pub s: usize,
}

impl KernelQuery {
    pub fn new(a: u64, t: usize, b: u64, s: usize) -> Self {
        Self { a, t, b, s }
    }
}

/// Eynard-Mehta kernel of the two-dimensional process with a precomputed inverse Gram matrix.
#[derive(Clone, Debug)]
pub struct EmKernel<T> {
    ensemble: TiltedEnsemble<T>,
    ginv: Matrix<T>,
}

impl<T: Scalar> EmKernel<T> {
    pub fn new(ensemble: TiltedEnsemble<T>) -> Result<Self, Schur2dError> {
        let ginv = ensemble.gram_matrix()?.inverse().ok_or(Schur2dError::SingularGram)?;
        Ok(Self { ensemble, ginv })
    }

    pub fn ensemble(&self) -> &TiltedEnsemble<T> {
        &self.ensemble
    }

    pub fn n(&self) -> usize {
        self.ensemble.n()
    }

    /// `−1_{t>s} (T_{β_s} ∗ ⋯ ∗ T_{β_{t−1}})(b, a) + Σ G⁻¹_{ji} D^{[1,t)}Φ_i(a) D^{[s,N)†}Ψ_j(b)`.
    pub fn eval(&self, a: u64, t: usize, b: u64, s: usize) -> T {
        let n = self.n();
        assert!((1..=n).contains(&t) && (1..=n).contains(&s), "levels must lie in 1..=N");
        let mut k = T::zero();
        if t > s && b >= a && b - a <= (t - s) as u64 {
            let neg: Vec<T> = self.ensemble.betas()[s - 1..t - 1].iter().map(|v| -v.clone()).collect();
            k = k - elementary_symmetric(&neg)[(b - a) as usize].clone();
        }
        let phi: Vec<T> = (0..n).map(|i| self.ensemble.tilted_phi(i, t, a)).collect();
        let psi: Vec<T> = (0..n).map(|j| self.ensemble.tilted_psi(j, s, b)).collect();
        for (i, p) in phi.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, q) in psi.iter().enumerate() {
                k = k + self.ginv[(j, i)].clone() * p.clone() * q.clone();
            }
        }
        k
    }

    pub fn query(&self, q: KernelQuery) -> T {
        self.eval(q.a, q.t, q.b, q.s)
    }
}

/// One-shot form of [`EmKernel::eval`]; build an [`EmKernel`] when evaluating many entries.
pub fn em_kernel<T: Scalar>(e: &TiltedEnsemble<T>, q: KernelQuery) -> Result<T, Schur2dError> {
    check_levels(e.n(), q)?;
    Ok(EmKernel::new(e.clone())?.query(q))
}

fn check_levels(n: usize, q: KernelQuery) -> Result<(), Schur2dError> {
    for level in [q.t, q.s] {
        if !(1..=n).contains(&level) {
            return Err(Schur2dError::LevelOutOfRange { level, n });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use groth_core::Rational;
    use groth_measures::{GrothendieckModel, WeightFn};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn one_level_kernel_is_a_rank_one_projection() {
        let e = TiltedEnsemble::new(vec![WeightFn::geometric(q(1, 3))], vec![WeightFn::geometric(q(2, 5))], vec![])
            .unwrap();
        let k = EmKernel::new(e).unwrap();
        assert_eq!(k.eval(2, 1, 3, 1), q(1, 9) * q(8, 125) * q(13, 15));
        let trace: f64 = (0..200).map(|a| k.eval(a, 1, a, 1).magnitude()).sum();
        assert!((trace - 1.0).abs() < 1e-12);
    }

    #[test]
    fn level_traces_count_n_particles() {
        let m = GrothendieckModel::homogeneous(3, 0.5f64, 0.4, -0.8).unwrap();
        let k = EmKernel::new(m.ensemble()).unwrap();
        for t in 1..=3 {
            let trace: f64 = (0..300).map(|a| k.eval(a, t, a, t)).sum();
            assert!((trace - 3.0).abs() < 1e-9, "level {t}: {trace}");
        }
    }

    #[test]
    fn levels_are_checked() {
        let m = GrothendieckModel::homogeneous(2, q(1, 2), q(1, 2), q(-1, 1)).unwrap();
        assert!(matches!(
            em_kernel(&m.ensemble(), KernelQuery::new(0, 3, 0, 1)),
            Err(Schur2dError::LevelOutOfRange { level: 3, n: 2 })
        ));
    }
}
