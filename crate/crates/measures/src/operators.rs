use std::collections::BTreeMap;

use groth_core::{binomial, elementary_symmetric, Scalar};

/// A function on the nonnegative integers, extended by zero to negative arguments.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightFn<T> {
    /// `k ↦ C(k, order) · base^(k − order)`, the `order`-th Taylor coefficient of `base^k` in
    /// `base`. Order zero is the plain geometric weight `base^k`; higher orders arise as limits of
    /// coinciding parameters.
    Geometric { base: T, order: usize },
    FiniteSupport(BTreeMap<u64, T>),
}

impl<T: Scalar> WeightFn<T> {
    pub fn geometric(base: T) -> Self {
        WeightFn::Geometric { base, order: 0 }
    }

    pub fn delta(k: u64) -> Self {
        WeightFn::FiniteSupport(BTreeMap::from([(k, T::one())]))
    }

    pub fn eval(&self, k: i64) -> T {
        if k < 0 {
            return T::zero();
        }
        let k = k as u64;
        match self {
            WeightFn::Geometric { base, order } => {
                let m = *order as u64;
                if k < m {
                    T::zero()
                } else if m == 0 {
                    base.powu(k)
                } else {
                    T::from_i64(binomial(k, m) as i64) * base.powu(k - m)
                }
            }
            WeightFn::FiniteSupport(map) => map.get(&k).cloned().unwrap_or_else(T::zero),
        }
    }
}

/// `D f(k) = f(k) − β f(k+1)`.
pub fn apply_d<T: Scalar>(f: &WeightFn<T>, beta: &T, k: u64) -> T {
    let k = k as i64;
    f.eval(k) - beta.clone() * f.eval(k + 1)
}

/// `D† f(k) = f(k) − β f(k−1) 𝟙_{k≥1}`.
pub fn apply_d_dagger<T: Scalar>(f: &WeightFn<T>, beta: &T, k: u64) -> T {
    let k = k as i64;
    f.eval(k) - beta.clone() * f.eval(k - 1)
}

/// Composition of `D` over the listed β's. The operators commute, so this is
/// `Σ_m e_m(−β) f(k+m)`.
pub fn apply_d_chain<T: Scalar>(f: &WeightFn<T>, betas: &[T], k: u64) -> T {
    let neg: Vec<T> = betas.iter().map(|b| -b.clone()).collect();
    let e = elementary_symmetric(&neg);
    let k = k as i64;
    e.iter().enumerate().fold(T::zero(), |acc, (m, c)| acc + c.clone() * f.eval(k + m as i64))
}

/// Composition of `D†` over the listed β's: `Σ_m e_m(−β) f(k−m)`, with `f` zero on negatives.
pub fn apply_d_dagger_chain<T: Scalar>(f: &WeightFn<T>, betas: &[T], k: u64) -> T {
    let neg: Vec<T> = betas.iter().map(|b| -b.clone()).collect();
    let e = elementary_symmetric(&neg);
    let k = k as i64;
    e.iter().enumerate().fold(T::zero(), |acc, (m, c)| acc + c.clone() * f.eval(k - m as i64))
}
