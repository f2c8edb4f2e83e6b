//! Explicit `N = 2` homogeneous correlations of the Grothendieck point process `{λ_1 + 1, λ_2}`.

use groth_core::Scalar;
use groth_measures::GrothendieckModel;

use crate::Schur2dError;

fn homogeneous_pair<T: Scalar>(m: &GrothendieckModel<T>) -> Result<(T, T, T), Schur2dError> {
    let p = m.params();
    if p.n() != 2 || !p.is_homogeneous() {
        return Err(Schur2dError::NotHomogeneousPair);
    }
    Ok((p.xs()[0].clone(), p.ys()[0].clone(), p.betas()[0].clone()))
}

fn c<T: Scalar>(v: i64) -> T {
    T::from_i64(v)
}

/// `ρ_{{i}}` for `i ∈ 0..=3`.
pub fn one_point_closed_form<T: Scalar>(m: &GrothendieckModel<T>, i: u64) -> Result<T, Schur2dError> {
    let (x, y, b) = homogeneous_pair(m)?;
    let one = T::one();
    let xy = x.clone() * y.clone();
    let bx = b.clone() * x.clone();
    let base = one.clone() - xy.clone() * xy.clone();
    let tilt = (one.clone() - xy.clone()).powu(4) / (one.clone() - bx.clone()).powu(2);
    let v = match i {
        0 => base,
        1 => xy.powu(2) * base + tilt,
        2 => {
            let inner = b.clone() * (bx.clone() - c(2)) + x.clone() * y.powu(2) + y.clone() * (c::<T>(4) - c::<T>(2) * bx.clone());
            xy.powu(4) * base + x.clone() * tilt * inner
        }
        3 => {
            let inner = x.powu(2) * y.powu(3) + y.clone() * (bx.powu(2) - c::<T>(8) * bx.clone() + c(9))
                + c::<T>(2) * b.clone() * (c::<T>(2) * bx.clone() - c(3))
                - c::<T>(2) * x.clone() * y.powu(2) * (bx.clone() - c(2));
            xy.powu(6) * base + x.powu(2) * y.clone() * tilt * inner
        }
        other => return Err(Schur2dError::UnsupportedIndex(other)),
    };
    Ok(v)
}

/// `ρ_{{i,j}} = P(λ = (i − 1, j))` for `i > j`.
pub fn two_point_closed_form<T: Scalar>(m: &GrothendieckModel<T>, i: u64, j: u64) -> Result<T, Schur2dError> {
    let (x, y, b) = homogeneous_pair(m)?;
    if i <= j {
        return Err(Schur2dError::InvalidSpec(format!("need i > j, got ({i}, {j})")));
    }
    let one = T::one();
    let tilt = (one.clone() - x.clone() * y.clone()).powu(4) / (one - x.clone() * b.clone()).powu(2);
    let (ii, jj) = (i as i64, j as i64);
    // x^{i+j−1} y^{i+j−2}; the y exponent is −1 only at (1, 0), where the last factor carries y
    let mono = x.powu(i + j - 1) * if i + j >= 2 { y.powu(i + j - 2) } else { T::one() / y.clone() };
    let f1 = b.clone() * x * c(ii - jj - 1) - c(ii - jj);
    let f2 = c::<T>(jj - ii) * (y - b.clone()) - b;
    Ok(tilt * mono * f1 * f2)
}
