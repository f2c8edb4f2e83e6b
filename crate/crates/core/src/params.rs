use crate::{CoreError, Scalar};

/// Positivity regime of a parameter set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `x_i, y_j ≥ 0` and `β_r ≤ 0`.
    Strict,
    /// `x_i, y_j ≥ 0`, some `β_r > 0`, and `β_r ≤ min(x_i⁻¹, y_j)`.
    Extended,
    /// Weights may be negative.
    Outside,
}

/// Parameters `x_1..x_N`, `y_1..y_N`, `β_1..β_{N−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelParams<T> {
    xs: Vec<T>,
    ys: Vec<T>,
    betas: Vec<T>,
}

impl<T: Scalar> ModelParams<T> {
    pub fn new(xs: Vec<T>, ys: Vec<T>, betas: Vec<T>) -> Result<Self, CoreError> {
        let n = xs.len();
        if n == 0 {
            return Err(CoreError::WrongLength { what: "x parameters", expected: 1, got: 0 });
        }
        if ys.len() != n {
            return Err(CoreError::WrongLength { what: "y parameters", expected: n, got: ys.len() });
        }
        if betas.len() != n - 1 {
            return Err(CoreError::WrongLength { what: "beta parameters", expected: n - 1, got: betas.len() });
        }
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in ys.iter().enumerate() {
                if (x.clone() * y.clone()).magnitude() >= 1.0 {
                    return Err(CoreError::Divergent { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(Self { xs, ys, betas })
    }

    pub fn homogeneous(n: usize, x: T, y: T, beta: T) -> Result<Self, CoreError> {
        Self::new(vec![x; n], vec![y; n], vec![beta; n.saturating_sub(1)])
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }

    pub fn xs(&self) -> &[T] {
        &self.xs
    }

    pub fn ys(&self) -> &[T] {
        &self.ys
    }

    pub fn betas(&self) -> &[T] {
        &self.betas
    }

    /// `β_r` with 1-based `r`.
    pub fn beta(&self, r: usize) -> &T {
        &self.betas[r - 1]
    }

    pub fn is_homogeneous(&self) -> bool {
        let same = |v: &[T]| v.windows(2).all(|w| w[0] == w[1]);
        same(&self.xs) && same(&self.ys) && same(&self.betas)
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&T) -> S) -> ModelParams<S> {
        ModelParams {
            xs: self.xs.iter().map(&f).collect(),
            ys: self.ys.iter().map(&f).collect(),
            betas: self.betas.iter().map(&f).collect(),
        }
    }
}

impl<T: Scalar + PartialOrd> ModelParams<T> {
    pub fn regime(&self) -> Regime {
        let zero = T::zero();
        if self.xs.iter().chain(&self.ys).any(|v| *v < zero) {
            return Regime::Outside;
        }
        if self.betas.iter().all(|b| *b <= zero) {
            return Regime::Strict;
        }
        let ok = self.betas.iter().all(|b| {
            self.ys.iter().all(|y| b <= y)
                && self.xs.iter().all(|x| x.is_zero() || b.clone() * x.clone() <= T::one())
        });
        if ok {
            Regime::Extended
        } else {
            Regime::Outside
        }
    }
}
