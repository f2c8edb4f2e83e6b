use groth_core::{enumerate_partitions, Matrix, ModelParams, Partition, Poly, Scalar};

use crate::ensemble::TiltedEnsemble;
use crate::operators::WeightFn;
use crate::MeasureError;

/// The Grothendieck measure `∏(1 − x_i y_j) / ∏(1 − x_i β_r) · G_λ(x⃗|β⃗) Ḡ_λ(y⃗|β⃗)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GrothendieckModel<T> {
    params: ModelParams<T>,
}

impl<T: Scalar> GrothendieckModel<T> {
    pub fn new(params: ModelParams<T>) -> Self {
        Self { params }
    }

    pub fn homogeneous(n: usize, x: T, y: T, beta: T) -> Result<Self, MeasureError> {
        Ok(Self::new(ModelParams::homogeneous(n, x, y, beta)?))
    }

    pub fn params(&self) -> &ModelParams<T> {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    /// The geometric tilted ensemble with `Φ_i(k) = x_i^k`, `Ψ_j(k) = y_j^k`. Repeated parameters
    /// get Taylor-coefficient descriptors of increasing order, which leaves the normalized
    /// measure unchanged and keeps the Gram matrix invertible.
    pub fn ensemble(&self) -> TiltedEnsemble<T> {
        let confluent = |vals: &[T]| -> Vec<WeightFn<T>> {
            vals.iter()
                .enumerate()
                .map(|(i, v)| WeightFn::Geometric { base: v.clone(), order: vals[..i].iter().filter(|w| *w == v).count() })
                .collect()
        };
        TiltedEnsemble::new(confluent(self.params.xs()), confluent(self.params.ys()), self.params.betas().to_vec())
            .expect("model parameters have consistent lengths")
    }

    fn particles(&self, lambda: &Partition) -> Result<Vec<u64>, MeasureError> {
        lambda.check_cap(self.n())?;
        let n = self.n();
        Ok((1..=n).map(|j| lambda.part(j) + (n - j) as u64).collect())
    }

    /// `G_λ(x⃗ | β⃗)`.
    pub fn g(&self, lambda: &Partition) -> Result<T, MeasureError> {
        let l = self.particles(lambda)?;
        let betas = self.params.betas();
        let cols: Vec<Poly<T>> = (0..self.n())
            .map(|j| {
                Poly::monomial(l[j] as usize)
                    .mul(&Poly::product_of_linear(betas[..j].iter().map(|b| (T::one(), -b.clone()))))
            })
            .collect();
        Ok(confluent_bialternant(self.params.xs(), &cols))
    }

    /// `Ḡ_λ(y⃗ | β⃗)`, evaluated through the polynomials `y^{ℓ_j − (N−j)} ∏_{r ≥ j} (y − β_r)`, so a
    /// zero `y` is allowed here.
    pub fn gbar(&self, lambda: &Partition) -> Result<T, MeasureError> {
        let l = self.particles(lambda)?;
        let n = self.n();
        let betas = self.params.betas();
        let cols: Vec<Poly<T>> = (0..n)
            .map(|j| {
                Poly::monomial((l[j] - (n - 1 - j) as u64) as usize)
                    .mul(&Poly::product_of_linear(betas[j..].iter().map(|b| (-b.clone(), T::one()))))
            })
            .collect();
        Ok(confluent_bialternant(self.params.ys(), &cols))
    }

    /// `Ḡ_λ(y⃗ | β⃗)` through the reversal identity `G_{λ^rev}(y⃗⁻¹ | β⃗^rev)` and the index shift.
    pub fn gbar_via_reversal(&self, lambda: &Partition) -> Result<T, MeasureError> {
        lambda.check_cap(self.n())?;
        if self.params.ys().iter().any(|y| y.is_zero()) {
            return Err(MeasureError::ZeroParameter);
        }
        let n = self.n();
        let top = lambda.part(1);
        // λ^rev + (λ_1^N) = (λ_1 − λ_N, …, λ_1 − λ_1)
        let shifted = Partition::new((1..=n).map(|j| top - lambda.part(n + 1 - j)).collect())?;
        let inv: Vec<T> = self.params.ys().iter().map(|y| T::one() / y.clone()).collect();
        let rev: Vec<T> = self.params.betas().iter().rev().cloned().collect();
        let m = GrothendieckModel { params: ModelParams::new(inv.clone(), vec![T::zero(); n], rev)? };
        let prod = inv.iter().fold(T::one(), |acc, w| acc * w.clone());
        Ok(m.g(&shifted)? / prod.powu(top))
    }

    /// `∏(1 − x_i y_j) / ∏(1 − x_i β_r)`.
    pub fn prefactor(&self) -> Result<T, MeasureError> {
        let (xs, ys, betas) = (self.params.xs(), self.params.ys(), self.params.betas());
        let mut num = T::one();
        for x in xs {
            for y in ys {
                num = num * (T::one() - x.clone() * y.clone());
            }
        }
        let mut den = T::one();
        for (i, x) in xs.iter().enumerate() {
            for (r, b) in betas.iter().enumerate() {
                let f = T::one() - x.clone() * b.clone();
                if f.is_zero() {
                    return Err(MeasureError::DegenerateNormalization { i: i + 1, r: r + 1 });
                }
                den = den * f;
            }
        }
        Ok(num / den)
    }

    /// Probability of `λ`.
    pub fn weight(&self, lambda: &Partition) -> Result<T, MeasureError> {
        Ok(self.prefactor()? * self.g(lambda)? * self.gbar(lambda)?)
    }

    /// `∏(1 − x_i β_r) ∏_{i<j}(x_i − x_j)(y_i − y_j) / ∏(1 − x_i y_j)`.
    pub fn cauchy_normalization(&self) -> T {
        let (xs, ys, betas) = (self.params.xs(), self.params.ys(), self.params.betas());
        let mut z = T::one();
        for x in xs {
            for b in betas {
                z = z * (T::one() - x.clone() * b.clone());
            }
            for y in ys {
                z = z / (T::one() - x.clone() * y.clone());
            }
        }
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                z = z * (xs[i].clone() - xs[j].clone()) * (ys[i].clone() - ys[j].clone());
            }
        }
        z
    }

    /// Sum of weights over `λ_1 ≤ max_part`.
    pub fn partial_sum(&self, max_part: u64) -> Result<T, MeasureError> {
        self.weight_sum(|p| p.part(1) <= max_part, max_part)
    }

    fn weight_sum(&self, keep: impl Fn(&Partition) -> bool, max_part: u64) -> Result<T, MeasureError> {
        let pre = self.prefactor()?;
        let mut acc = T::zero();
        for p in enumerate_partitions(self.n(), max_part).filter(|p| keep(p)) {
            acc = acc + self.g(&p)? * self.gbar(&p)?;
        }
        Ok(acc * pre)
    }

    /// Truncated Cauchy sums: start at `λ_1 ≤ start` and double the cap until the newly added
    /// mass is below `tol` in magnitude, or `limit` is reached.
    pub fn cauchy_check(&self, tol: f64, start: u64, limit: u64) -> Result<CauchyCheck<T>, MeasureError> {
        let mut cap = start.max(1);
        let mut sum = self.partial_sum(cap)?;
        loop {
            let next = (cap * 2).min(limit);
            let inc = self.weight_sum(|p| p.part(1) > cap, next)?;
            sum = sum + inc.clone();
            cap = next;
            if inc.magnitude() < tol || cap >= limit {
                return Ok(CauchyCheck { sum, max_part: cap, last_increment: inc });
            }
        }
    }
}

/// Result of [`GrothendieckModel::cauchy_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct CauchyCheck<T> {
    pub sum: T,
    pub max_part: u64,
    pub last_increment: T,
}

/// `det[f_j(v_i)] / ∏_{i<j}(v_i − v_j)` for polynomial columns `f_j`, with coinciding values
/// handled by derivative rows `f_j^{(k)}(v)/k!` over the matching confluent Vandermonde.
pub fn confluent_bialternant<T: Scalar>(vals: &[T], cols: &[Poly<T>]) -> T {
    let n = vals.len();
    assert_eq!(cols.len(), n);
    let mut rows: Vec<(T, usize)> = Vec::with_capacity(n);
    for (i, v) in vals.iter().enumerate() {
        rows.push((v.clone(), vals[..i].iter().filter(|w| *w == v).count()));
    }
    let num = Matrix::from_fn(n, n, |i, j| cols[j].taylor_coeff(&rows[i].0, rows[i].1));
    let vander: Vec<Poly<T>> = (0..n).map(|j| Poly::monomial(n - 1 - j)).collect();
    let den = Matrix::from_fn(n, n, |i, j| vander[j].taylor_coeff(&rows[i].0, rows[i].1));
    num.det() / den.det()
}

/// `G_λ(x⃗ | β⃗)`.
pub fn grothendieck_g<T: Scalar>(lambda: &Partition, m: &GrothendieckModel<T>) -> Result<T, MeasureError> {
    m.g(lambda)
}

/// `Ḡ_λ(y⃗ | β⃗)`.
pub fn grothendieck_gbar<T: Scalar>(lambda: &Partition, m: &GrothendieckModel<T>) -> Result<T, MeasureError> {
    m.gbar(lambda)
}

/// Probability of `λ` under the Grothendieck measure.
pub fn grothendieck_weight<T: Scalar>(lambda: &Partition, m: &GrothendieckModel<T>) -> Result<T, MeasureError> {
    m.weight(lambda)
}

/// Schur polynomial through Jacobi-Trudi, `det[h_{λ_i − i + j}]`.
pub fn schur_polynomial<T: Scalar>(lambda: &Partition, vars: &[T]) -> T {
    let n = lambda.len().max(1);
    let top = lambda.part(1) as usize + n;
    // h[k] = complete homogeneous symmetric polynomial of degree k
    let mut h = vec![T::zero(); top + 1];
    h[0] = T::one();
    for v in vars {
        for k in 1..=top {
            h[k] = h[k].clone() + v.clone() * h[k - 1].clone();
        }
    }
    Matrix::from_fn(n, n, |i, j| {
        let k = lambda.part(i + 1) as i64 - i as i64 + j as i64;
        if k < 0 {
            T::zero()
        } else {
            h[k as usize].clone()
        }
    })
    .det()
}

/// Schur measure weight `∏(1 − x_i y_j) s_λ(x⃗) s_λ(y⃗)`.
pub fn schur_weight<T: Scalar>(lambda: &Partition, xs: &[T], ys: &[T]) -> T {
    let mut pre = T::one();
    for x in xs {
        for y in ys {
            pre = pre * (T::one() - x.clone() * y.clone());
        }
    }
    pre * schur_polynomial(lambda, xs) * schur_polynomial(lambda, ys)
}
