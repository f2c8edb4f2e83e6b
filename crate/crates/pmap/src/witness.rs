use groth_core::Scalar;
use groth_measures::GrothendieckModel;
use groth_schur2d::{correlation_function, EmKernel};

use crate::minors::indices_of;
use crate::{cluster_from_minors, nanson4, MinorTable, PmapError};

/// Correlations `ρ_I` of the Grothendieck process over all subsets of `points`, as a minor table.
pub fn correlation_minors<T: Scalar>(m: &GrothendieckModel<T>, points: &[u64]) -> Result<MinorTable<T>, PmapError> {
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(PmapError::RepeatedPoint);
    }
    let k = EmKernel::new(m.ensemble())?;
    let n = points.len();
    let mut values = Vec::with_capacity(1 << n);
    for mask in 0..1usize << n {
        let pts: Vec<u64> = indices_of(mask).iter().map(|&i| points[i - 1]).collect();
        values.push(correlation_function(&k, &pts)?);
    }
    MinorTable::from_values(n, values)
}

/// `𝔑_4` of the cycle sums built from the correlations on four points. Zero for determinantal
/// processes.
pub fn determinantality_witness<T: Scalar>(m: &GrothendieckModel<T>, points: &[u64]) -> Result<T, PmapError> {
    if points.len() != 4 {
        return Err(PmapError::WrongSize { expected: 4, got: points.len() });
    }
    nanson4(&cluster_from_minors(&correlation_minors(m, points)?))
}

/// `(β − 2)^32 / ((β − 4)(β − 1)β^4)`, which strips the known factors from the witness at
/// `x = y = 1/2`. `None` where it has a pole.
pub fn witness_scale<T: Scalar>(beta: &T) -> Option<T> {
    let b = beta.clone();
    let den = (b.clone() - T::from_i64(4)) * (b.clone() - T::one()) * b.powu(4);
    if den.is_zero() {
        return None;
    }
    Some((b - T::from_i64(2)).powu(32) / den)
}
