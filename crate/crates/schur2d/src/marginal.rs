use groth_core::{Matrix, Poly, Scalar};

use crate::{EmKernel, Schur2dError};

/// Levels `i_1 < … < i_k` (1-based) and targets `a_{i_1} > … > a_{i_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrelationSpec {
    levels: Vec<usize>,
    targets: Vec<u64>,
}

impl CorrelationSpec {
    pub fn new(levels: Vec<usize>, targets: Vec<u64>) -> Result<Self, Schur2dError> {
        if levels.len() != targets.len() {
            return Err(Schur2dError::InvalidSpec(format!("{} levels but {} targets", levels.len(), targets.len())));
        }
        if levels.first() == Some(&0) || levels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Schur2dError::InvalidSpec("levels must be strictly increasing and ≥ 1".into()));
        }
        if targets.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Schur2dError::InvalidSpec("targets must be strictly decreasing".into()));
        }
        Ok(Self { levels, targets })
    }

    pub fn empty() -> Self {
        Self { levels: Vec::new(), targets: Vec::new() }
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn targets(&self) -> &[u64] {
        &self.targets
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

/// Weights `c_j` with `[z^m] P = Σ_j c_j P(j)` for any `P` of degree `≤ d`, nodes `0..=d`.
fn extraction_weights<T: Scalar>(d: usize, m: usize) -> Vec<T> {
    (0..=d)
        .map(|j| {
            let mut basis = Poly::one();
            let mut den = T::one();
            for k in (0..=d).filter(|&k| k != j) {
                basis = basis.mul(&Poly::linear(T::from_i64(-(k as i64)), T::one()));
                den = den * T::from_i64(j as i64 - k as i64);
            }
            basis.coeff(m) / den
        })
        .collect()
}

/// `P(ℓ_{i_1} = a_{i_1}, …, ℓ_{i_k} = a_{i_k})` via the coefficient
/// `[z_1^{N−i_1} ⋯ z_k^{N−i_k} w_1 ⋯ w_k] det(1 − Σ_p (1 − z_p) K χ_{B_p} − Σ_p (1 − w_p) K χ_{C_p})`
/// on the window `F = ∪_p B_p ∪ C_p`, `B_p = {0..a_p−1} × {i_p}`, `C_p = {(a_p, i_p)}`.
///
/// The determinant has degree `≤ min(a_p, N)` in `z_p` and `≤ 1` in `w_p`, so the coefficient is
/// an exact linear combination of its values on the grid `z_p ∈ 0..=min(a_p, N)`, `w_p ∈ {0, 1}`.
pub fn marginal_probability<T: Scalar>(k: &EmKernel<T>, spec: &CorrelationSpec) -> Result<T, Schur2dError> {
    let n = k.n();
    if spec.is_empty() {
        return Ok(T::one());
    }
    if let Some(&level) = spec.levels.iter().find(|&&l| l > n) {
        return Err(Schur2dError::LevelOutOfRange { level, n });
    }
    let kk = spec.len();
    let want: Vec<usize> = spec.levels.iter().map(|&i| n - i).collect();
    let degs: Vec<usize> = spec.targets.iter().map(|&a| (a as usize).min(n)).collect();
    if want.iter().zip(&degs).any(|(w, d)| w > d) {
        return Ok(T::zero());
    }
    // window points: (position, level, variable index); variables 0..kk are z_p, kk..2kk are w_p
    let mut pts: Vec<(u64, usize, usize)> = Vec::new();
    for (p, (&i, &a)) in spec.levels.iter().zip(&spec.targets).enumerate() {
        pts.extend((0..a).map(|c| (c, i, p)));
        pts.push((a, i, kk + p));
    }
    let kmat = Matrix::from_fn(pts.len(), pts.len(), |r, c| k.eval(pts[r].0, pts[r].1, pts[c].0, pts[c].1));
    let zweights: Vec<Vec<T>> = (0..kk).map(|p| extraction_weights(degs[p], want[p])).collect();

    let mut total = T::zero();
    let mut zidx = vec![0usize; kk];
    loop {
        let zw = (0..kk).fold(T::one(), |acc, p| acc * zweights[p][zidx[p]].clone());
        if !zw.is_zero() {
            for wmask in 0u32..(1 << kk) {
                // [w^1] P = P(1) − P(0)
                let neg = (0..kk).filter(|p| wmask >> p & 1 == 0).count();
                let mut vals: Vec<T> = zidx.iter().map(|&z| T::from_i64(z as i64)).collect();
                vals.extend((0..kk).map(|p| T::from_i64((wmask >> p & 1) as i64)));
                let m = Matrix::from_fn(pts.len(), pts.len(), |r, c| {
                    let coef = T::one() - vals[pts[c].2].clone();
                    let delta = if r == c { T::one() } else { T::zero() };
                    delta - coef * kmat[(r, c)].clone()
                });
                let d = m.det();
                let term = zw.clone() * d;
                total = if neg % 2 == 0 { total + term } else { total - term };
            }
        }
        // odometer over z grid
        let mut p = 0;
        while p < kk {
            zidx[p] += 1;
            if zidx[p] <= degs[p] {
                break;
            }
            zidx[p] = 0;
            p += 1;
        }
        if p == kk {
            break;
        }
    }
    Ok(total)
}

/// `ρ(a_1, …, a_k) = Σ_𝓘 P(X_𝓘 = {a_1, …, a_k})` over `|𝓘| = k`.
pub fn correlation_function<T: Scalar>(k: &EmKernel<T>, points: &[u64]) -> Result<T, Schur2dError> {
    let mut pts = points.to_vec();
    pts.sort_unstable_by(|a, b| b.cmp(a));
    if pts.windows(2).any(|w| w[0] == w[1]) {
        return Err(Schur2dError::InvalidSpec("points must be pairwise distinct".into()));
    }
    let n = k.n();
    if pts.len() > n {
        return Ok(T::zero());
    }
    let mut total = T::zero();
    for levels in subsets(n, pts.len()) {
        total = total + marginal_probability(k, &CorrelationSpec::new(levels, pts.clone())?)?;
    }
    Ok(total)
}

/// `det[K(ℓ_i, i; ℓ_j, j)]`, which equals the probability of `ℓ` only when all gaps are `≥ 2`.
pub fn naive_kernel_measure<T: Scalar>(k: &EmKernel<T>, ell: &[u64]) -> T {
    Matrix::from_fn(ell.len(), ell.len(), |i, j| k.eval(ell[i], i + 1, ell[j], j + 1)).det()
}

/// Increasing `k`-subsets of `1..=n`.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            out.push((1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect());
        }
    }
    out
}
