use crate::Scalar;

/// Dense univariate polynomial, coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![T::one()])
    }

    /// `X^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![T::zero(); k + 1];
        c[k] = T::one();
        Self { coeffs: c }
    }

    /// `a + b X`.
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self { coeffs: Vec::new() };
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    /// Product of `a + b X` over the given pairs.
    pub fn product_of_linear(factors: impl IntoIterator<Item = (T, T)>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, (a, b)| acc.mul(&Self::linear(a, b)))
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `p^{(k)}(x) / k!`, the k-th Taylor coefficient at `x`.
    pub fn taylor_coeff(&self, x: &T, k: usize) -> T {
        let mut acc = T::zero();
        for n in (k..self.coeffs.len()).rev() {
            let c = self.coeffs[n].clone() * T::from_i64(binomial(n as u64, k as u64) as i64);
            acc = acc * x.clone() + c;
        }
        acc
    }
}

/// Binomial coefficient; panics on overflow of `u64`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r.checked_mul(n - i).expect("binomial overflow") / (i + 1);
    }
    r
}

/// Coefficients `e_0, …, e_m` of `∏ (1 + v_r s)` in `s`.
pub fn elementary_symmetric<T: Scalar>(vals: &[T]) -> Vec<T> {
    let mut e = vec![T::one()];
    for v in vals {
        e.push(T::zero());
        for m in (1..e.len()).rev() {
            e[m] = e[m].clone() + v.clone() * e[m - 1].clone();
        }
    }
    e
}
