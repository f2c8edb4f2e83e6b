use groth_core::{Matrix, Scalar};

use crate::PmapError;

pub const MAX_MINOR_SIZE: usize = 12;

/// Bitmask of a set of 1-based indices.
pub fn mask_of(indices: &[usize]) -> usize {
    indices.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

/// 1-based indices in a bitmask, increasing.
pub fn indices_of(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// All `2^n` principal minors `A_I`, indexed by the bitmask of `I`; `A_∅ = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct MinorTable<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Scalar> MinorTable<T> {
    /// Values in bitmask order; the empty minor is forced to 1.
    pub fn from_values(n: usize, mut values: Vec<T>) -> Result<Self, PmapError> {
        if n > MAX_MINOR_SIZE {
            return Err(PmapError::SizeLimit { n, limit: MAX_MINOR_SIZE });
        }
        if values.len() != 1 << n {
            return Err(PmapError::WrongLength { expected: 1 << n, got: values.len() });
        }
        values[0] = T::one();
        Ok(Self { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&[usize]) -> T) -> Result<Self, PmapError> {
        Self::from_values(n, (0..1usize << n).map(|m| f(&indices_of(m))).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn by_mask(&self, mask: usize) -> &T {
        &self.values[mask]
    }

    pub fn get(&self, indices: &[usize]) -> &T {
        &self.values[mask_of(indices)]
    }

    pub fn set(&mut self, indices: &[usize], v: T) {
        let m = mask_of(indices);
        if m != 0 {
            self.values[m] = v;
        }
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&T) -> S) -> MinorTable<S> {
        MinorTable { n: self.n, values: self.values.iter().map(f).collect() }
    }
}

/// Cycle sums `T_I`, `|I| ≥ 2`, indexed by bitmask.
#[derive(Clone, Debug, PartialEq)]
pub struct ClusterTable<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Scalar> ClusterTable<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn by_mask(&self, mask: usize) -> &T {
        &self.values[mask]
    }

    /// `T_I` for 1-based indices in any order.
    pub fn get(&self, indices: &[usize]) -> &T {
        &self.values[mask_of(indices)]
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&T) -> S) -> ClusterTable<S> {
        ClusterTable { n: self.n, values: self.values.iter().map(f).collect() }
    }
}

/// All principal minors of a square matrix.
pub fn principal_minors<T: Scalar>(a: &Matrix<T>) -> Result<MinorTable<T>, PmapError> {
    if !a.is_square() {
        return Err(PmapError::NotSquare);
    }
    let n = a.rows();
    if n > MAX_MINOR_SIZE {
        return Err(PmapError::SizeLimit { n, limit: MAX_MINOR_SIZE });
    }
    MinorTable::from_fn(n, |idx| {
        let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
        a.principal(&zero_based).det()
    })
}

/// Cycle sums from minors. Expanding `A_I` along the cycle through `min I` gives
/// `A_I = Σ_{B ∋ min I} c_B A_{I∖B}` with `c_B = (−1)^{|B|−1} T_B`, which is solved upward in `|I|`.
pub fn cluster_from_minors<T: Scalar>(m: &MinorTable<T>) -> ClusterTable<T> {
    let n = m.n;
    let mut c = vec![T::zero(); 1 << n];
    let mut masks: Vec<usize> = (1..1usize << n).collect();
    masks.sort_by_key(|x| x.count_ones());
    for &i in &masks {
        let low = i & i.wrapping_neg();
        let mut v = m.values[i].clone();
        // proper subsets B of I containing min I
        let rest = i ^ low;
        let mut sub = rest;
        loop {
            let b = sub | low;
            if b != i {
                v = v - c[b].clone() * m.values[i ^ b].clone();
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        c[i] = v;
    }
    let values = c
        .into_iter()
        .enumerate()
        .map(|(mask, v)| match mask.count_ones() {
            0 | 1 => T::zero(),
            k if k % 2 == 0 => -v,
            _ => v,
        })
        .collect();
    ClusterTable { n, values }
}
