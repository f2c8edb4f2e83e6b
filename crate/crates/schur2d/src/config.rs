use groth_core::{enumerate_partitions, partition_to_particles, Matrix, Scalar};
use groth_measures::TiltedEnsemble;

use crate::Schur2dError;

/// Particle array `x^m_j`, stored as `levels[m − 1][j − 1]`; every level strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Config2D {
    levels: Vec<Vec<u64>>,
}

impl Config2D {
    pub fn new(levels: Vec<Vec<u64>>) -> Result<Self, Schur2dError> {
        let n = levels.len();
        for (m, row) in levels.iter().enumerate() {
            if row.len() != n {
                return Err(Schur2dError::InvalidSpec(format!("level {} has {} particles, expected {n}", m + 1, row.len())));
            }
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Schur2dError::InvalidSpec(format!("level {} is not strictly decreasing", m + 1)));
            }
        }
        Ok(Self { levels })
    }

    pub fn n(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Vec<u64>] {
        &self.levels
    }

    /// `x^m_j`, both indices 1-based.
    pub fn get(&self, m: usize, j: usize) -> u64 {
        self.levels[m - 1][j - 1]
    }

    /// `(x^1_1, x^2_2, …, x^N_N)`.
    pub fn diagonal(&self) -> Vec<u64> {
        (0..self.n()).map(|m| self.levels[m][m]).collect()
    }

    /// Each step down a level moves every particle left by 0 or 1.
    pub fn is_interlaced(&self) -> bool {
        self.levels.windows(2).all(|w| w[0].iter().zip(&w[1]).all(|(a, b)| a >= b && a - b <= 1))
    }

    /// Whether `(a, t)` is occupied.
    pub fn contains(&self, a: u64, t: usize) -> bool {
        self.levels[t - 1].contains(&a)
    }
}

/// `det[T_β(upper_i, lower_j)]` with `T_β(x, y) = 1_{y=x} − β 1_{y=x−1}`.
pub fn transfer_determinant<T: Scalar>(beta: &T, upper: &[u64], lower: &[u64]) -> T {
    Matrix::from_fn(upper.len(), lower.len(), |i, j| {
        if lower[j] == upper[i] {
            T::one()
        } else if lower[j] + 1 == upper[i] {
            -beta.clone()
        } else {
            T::zero()
        }
    })
    .det()
}

/// `det[Φ_i(x^1_j)] ∏_m (−β_m)^{|x^m| − |x^{m+1}|} det[Ψ_i(x^N_j)]`; zero off the interlacing support.
pub fn weight_2d<T: Scalar>(e: &TiltedEnsemble<T>, x: &Config2D) -> T {
    let n = e.n();
    if x.n() != n || !x.is_interlaced() {
        return T::zero();
    }
    let top = &x.levels[0];
    let bottom = &x.levels[n - 1];
    let a = Matrix::from_fn(n, n, |i, j| e.phi()[i].eval(top[j] as i64));
    let b = Matrix::from_fn(n, n, |i, j| e.psi()[i].eval(bottom[j] as i64));
    let mut w = a.det() * b.det();
    for m in 0..n - 1 {
        let drop: u64 = x.levels[m].iter().sum::<u64>() - x.levels[m + 1].iter().sum::<u64>();
        w = w * (-e.betas()[m].clone()).powu(drop);
    }
    w
}

/// All interlaced configurations with `x^1_1 ≤ cap`. Since `x^1_1` is the largest coordinate, this
/// contains every configuration whose diagonal has `x^1_1 ≤ cap`.
pub fn enumerate_configs_2d(n: usize, cap: u64) -> impl Iterator<Item = Config2D> {
    assert!(n >= 1 && cap + 1 >= n as u64, "cap must be at least N − 1");
    enumerate_partitions(n, cap + 1 - n as u64).flat_map(move |lambda| {
        let top = partition_to_particles(&lambda, n).expect("partition fits").points().to_vec();
        let mut out = Vec::new();
        extend(vec![top], n, &mut out);
        out.into_iter().map(|levels| Config2D { levels })
    })
}

fn extend(levels: Vec<Vec<u64>>, n: usize, out: &mut Vec<Vec<Vec<u64>>>) {
    if levels.len() == n {
        out.push(levels);
        return;
    }
    let last = levels.last().unwrap().clone();
    for mask in 0u32..(1 << n) {
        let next: Option<Vec<u64>> =
            last.iter().enumerate().map(|(j, &v)| if mask >> j & 1 == 1 { v.checked_sub(1) } else { Some(v) }).collect();
        let Some(next) = next else { continue };
        if next.windows(2).all(|w| w[0] > w[1]) {
            let mut l = levels.clone();
            l.push(next);
            extend(l, n, out);
        }
    }
}
