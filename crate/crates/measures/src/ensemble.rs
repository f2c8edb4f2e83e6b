use std::collections::BTreeSet;

use groth_core::{binomial, Matrix, ParticleConfig, Poly, Scalar};

use crate::operators::{apply_d, apply_d_chain, apply_d_dagger, apply_d_dagger_chain, WeightFn};
use crate::MeasureError;

/// Product-of-determinants ensemble on `N`-point configurations with columns tilted by the
/// difference operators `D^{(r)}` and `D^{(r)†}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TiltedEnsemble<T> {
    phi: Vec<WeightFn<T>>,
    psi: Vec<WeightFn<T>>,
    betas: Vec<T>,
}

impl<T: Scalar> TiltedEnsemble<T> {
    pub fn new(phi: Vec<WeightFn<T>>, psi: Vec<WeightFn<T>>, betas: Vec<T>) -> Result<Self, MeasureError> {
        let n = phi.len();
        if n == 0 || psi.len() != n || betas.len() + 1 != n {
            return Err(MeasureError::Shape { phi: n, psi: psi.len(), betas: betas.len() });
        }
        Ok(Self { phi, psi, betas })
    }

    pub fn n(&self) -> usize {
        self.phi.len()
    }

    pub fn phi(&self) -> &[WeightFn<T>] {
        &self.phi
    }

    pub fn psi(&self) -> &[WeightFn<T>] {
        &self.psi
    }

    pub fn betas(&self) -> &[T] {
        &self.betas
    }

    fn check_r(&self, r: usize) -> Result<(), MeasureError> {
        if r == 0 || r >= self.n() {
            return Err(MeasureError::IndexOutOfRange { r, n: self.n() });
        }
        Ok(())
    }

    /// `D^{(r)} f(k)`, `r ∈ 1..N`.
    pub fn apply_d(&self, f: &WeightFn<T>, r: usize, k: u64) -> Result<T, MeasureError> {
        self.check_r(r)?;
        Ok(apply_d(f, &self.betas[r - 1], k))
    }

    /// `D^{(r)†} f(k)`, `r ∈ 1..N`.
    pub fn apply_d_dagger(&self, f: &WeightFn<T>, r: usize, k: u64) -> Result<T, MeasureError> {
        self.check_r(r)?;
        Ok(apply_d_dagger(f, &self.betas[r - 1], k))
    }

    /// `D^{[a,b)} f(k) = D^{(a)} ⋯ D^{(b−1)} f(k)`; empty when `a ≥ b`.
    pub fn apply_d_range(&self, f: &WeightFn<T>, a: usize, b: usize, k: u64) -> Result<T, MeasureError> {
        Ok(apply_d_chain(f, self.range(a, b)?, k))
    }

    /// `D^{[a,b)†} f(k)`.
    pub fn apply_d_dagger_range(&self, f: &WeightFn<T>, a: usize, b: usize, k: u64) -> Result<T, MeasureError> {
        Ok(apply_d_dagger_chain(f, self.range(a, b)?, k))
    }

    fn range(&self, a: usize, b: usize) -> Result<&[T], MeasureError> {
        if a >= b {
            return Ok(&[]);
        }
        self.check_r(a)?;
        self.check_r(b - 1)?;
        Ok(&self.betas[a - 1..b - 1])
    }

    /// `D^{[1,t)} Φ_i(x)` for 0-based `i` and level `t ∈ 1..=N`.
    pub fn tilted_phi(&self, i: usize, t: usize, x: u64) -> T {
        apply_d_chain(&self.phi[i], &self.betas[..t - 1], x)
    }

    /// `D^{[s,N)†} Ψ_j(y)` for 0-based `j` and level `s ∈ 1..=N`.
    pub fn tilted_psi(&self, j: usize, s: usize, y: u64) -> T {
        apply_d_dagger_chain(&self.psi[j], &self.betas[s - 1..], y)
    }

    /// `det[D^{[1,j)} Φ_i(ℓ_j)] · det[D^{[j,N)†} Ψ_i(ℓ_j)]`; zero when the point count is not `N`.
    pub fn weight(&self, x: &ParticleConfig) -> T {
        let n = self.n();
        if x.len() != n {
            return T::zero();
        }
        let l = x.points();
        let a = Matrix::from_fn(n, n, |i, j| self.tilted_phi(i, j + 1, l[j]));
        let b = Matrix::from_fn(n, n, |i, j| self.tilted_psi(i, j + 1, l[j]));
        a.det() * b.det()
    }

    /// `G_ij = Σ_k Ψ_j(k) D^{[1,N)} Φ_i(k)`, in closed form for geometric pairs.
    pub fn gram_matrix(&self) -> Result<Matrix<T>, MeasureError> {
        let n = self.n();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = self.gram_entry(i, j)?;
            }
        }
        Ok(g)
    }

    fn gram_entry(&self, i: usize, j: usize) -> Result<T, MeasureError> {
        let dphi = |k: u64| apply_d_chain(&self.phi[i], &self.betas, k);
        match (&self.phi[i], &self.psi[j]) {
            (WeightFn::Geometric { base: x, order: m }, WeightFn::Geometric { base: y, order: n }) => {
                if (x.clone() * y.clone()).magnitude() >= 1.0 {
                    return Err(MeasureError::DivergentSum { i: i + 1, j: j + 1 });
                }
                Ok(geometric_gram(x, *m, y, *n, &self.betas))
            }
            (_, WeightFn::FiniteSupport(map)) => {
                Ok(map.iter().fold(T::zero(), |acc, (&k, v)| acc + v.clone() * dphi(k)))
            }
            (WeightFn::FiniteSupport(map), psi) => {
                let width = self.betas.len() as u64;
                let ks: BTreeSet<u64> = map.keys().flat_map(|&s| s.saturating_sub(width)..=s).collect();
                Ok(ks.into_iter().fold(T::zero(), |acc, k| acc + psi.eval(k as i64) * dphi(k)))
            }
        }
    }

    /// `𝒵 = det G`.
    pub fn normalization(&self) -> Result<T, MeasureError> {
        Ok(self.gram_matrix()?.det())
    }
}

/// `Σ_k [y^n] y^k · [x^m] D^{[1,N)} x^k` where `[x^m]` takes the m-th Taylor coefficient in the
/// base, i.e. `(1/m! n!) ∂_x^m ∂_y^n [∏_r(1 − β_r x) / (1 − xy)]`.
fn geometric_gram<T: Scalar>(x: &T, m: usize, y: &T, n: usize, betas: &[T]) -> T {
    let p = Poly::product_of_linear(betas.iter().map(|b| (T::one(), -b.clone())));
    // (1/n!) ∂_y^n (1 − xy)^{-1} = x^n (1 − xy)^{-(n+1)}
    let q = p.mul(&Poly::monomial(n));
    let one_minus = T::one() - x.clone() * y.clone();
    let mut acc = T::zero();
    for a in 0..=m {
        let b = (m - a) as u64;
        // (1/b!) ∂_x^b (1 − xy)^{-(n+1)} = C(n+b, b) y^b (1 − xy)^{-(n+1+b)}
        let tail = T::from_i64(binomial(n as u64 + b, b) as i64) * y.powu(b) / one_minus.powu(n as u64 + 1 + b);
        acc = acc + q.taylor_coeff(x, a) * tail;
    }
    acc
}

/// Free-function form of [`TiltedEnsemble::weight`].
pub fn tilted_weight<T: Scalar>(e: &TiltedEnsemble<T>, x: &ParticleConfig) -> T {
    e.weight(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use groth_core::Rational;
    use std::collections::BTreeMap;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn gram_closed_form_matches_truncated_sums() {
        let betas = [0.3, -1.2];
        for (m, n) in [(0, 0), (1, 0), (0, 2), (2, 1), (1, 1)] {
            let (x, y) = (0.4, 0.55);
            let e = TiltedEnsemble::new(
                vec![WeightFn::Geometric { base: x, order: m }; 3],
                vec![WeightFn::Geometric { base: y, order: n }; 3],
                betas.to_vec(),
            )
            .unwrap();
            let closed = e.gram_matrix().unwrap()[(0, 0)];
            let summed: f64 = (0..400u64).map(|k| e.psi()[0].eval(k as i64) * apply_d_chain(&e.phi()[0], &betas, k)).sum();
            assert!((closed - summed).abs() < 1e-12, "orders ({m},{n}): {closed} vs {summed}");
        }
    }

    #[test]
    fn gram_examples() {
        let e = TiltedEnsemble::new(
            vec![WeightFn::geometric(q(1, 2)); 2],
            vec![WeightFn::geometric(q(1, 2)); 2],
            vec![q(-1, 1)],
        )
        .unwrap();
        assert_eq!(e.gram_matrix().unwrap(), Matrix::from_fn(2, 2, |_, _| q(2, 1)));
        assert_eq!(e.normalization().unwrap(), q(0, 1));

        let d = TiltedEnsemble::new(vec![WeightFn::<Rational>::delta(0)], vec![WeightFn::delta(0)], vec![]).unwrap();
        assert_eq!(d.gram_matrix().unwrap(), Matrix::identity(1));

        let one = TiltedEnsemble::new(vec![WeightFn::geometric(q(1, 3))], vec![WeightFn::geometric(q(2, 5))], vec![])
            .unwrap();
        assert_eq!(one.normalization().unwrap(), q(15, 13));
    }

    #[test]
    fn finite_support_gram_against_direct_sum() {
        let phi = WeightFn::FiniteSupport(BTreeMap::from([(0, q(1, 2)), (3, q(-2, 1)), (4, q(1, 7))]));
        let psi = WeightFn::geometric(q(1, 3));
        let betas = vec![q(2, 1), q(-1, 3)];
        let e = TiltedEnsemble::new(vec![phi.clone(); 3], vec![psi.clone(); 3], betas.clone()).unwrap();
        let direct = (0..10u64).fold(q(0, 1), |acc, k| acc + psi.eval(k as i64) * apply_d_chain(&phi, &betas, k));
        assert_eq!(e.gram_matrix().unwrap()[(1, 2)], direct);
    }

    #[test]
    fn wrong_size_weight_is_zero_and_index_errors() {
        let e = TiltedEnsemble::new(
            vec![WeightFn::geometric(q(1, 2)); 2],
            vec![WeightFn::geometric(q(1, 3)); 2],
            vec![q(-1, 1)],
        )
        .unwrap();
        assert_eq!(e.weight(&ParticleConfig::new(vec![3]).unwrap()), q(0, 1));
        assert!(matches!(e.apply_d(&e.phi()[0], 2, 0), Err(MeasureError::IndexOutOfRange { .. })));
        assert!(matches!(e.apply_d_dagger(&e.phi()[0], 0, 0), Err(MeasureError::IndexOutOfRange { .. })));
        assert!(e.apply_d(&e.phi()[0], 1, 0).is_ok());
    }
}
