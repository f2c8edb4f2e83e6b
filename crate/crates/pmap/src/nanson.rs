use groth_core::{Complex64, Matrix, Scalar};

use crate::minors::mask_of;
use crate::{ClusterTable, PmapError};

pub const MAX_NANSON_SIZE: usize = 7;

/// Nanson's order-four test: half the determinant of a 4×4 matrix in the cycle sums.
pub fn nanson4<T: Scalar>(t: &ClusterTable<T>) -> Result<T, PmapError> {
    if t.n() != 4 {
        return Err(PmapError::WrongSize { expected: 4, got: t.n() });
    }
    let g = |idx: &[usize]| t.get(idx).clone();
    let two = T::from_i64(2);
    let (t12, t13, t14, t23, t24, t34) = (g(&[1, 2]), g(&[1, 3]), g(&[1, 4]), g(&[2, 3]), g(&[2, 4]), g(&[3, 4]));
    let (t123, t124, t134, t234) = (g(&[1, 2, 3]), g(&[1, 2, 4]), g(&[1, 3, 4]), g(&[2, 3, 4]));
    let rows = vec![
        vec![
            t123.clone() * t14.clone(),
            t124.clone() * t13.clone(),
            t134.clone() * t12.clone(),
            two.clone() * t12.clone() * t13.clone() * t14.clone() * t234.clone() + t123.clone() * t124.clone() * t134.clone(),
        ],
        vec![
            t124.clone() * t23.clone(),
            t123.clone() * t24.clone(),
            t234.clone() * t12.clone(),
            two.clone() * t12.clone() * t23.clone() * t24.clone() * t134.clone() + t123.clone() * t124.clone() * t234.clone(),
        ],
        vec![
            t134.clone() * t23.clone(),
            t234.clone() * t13.clone(),
            t123.clone() * t34.clone(),
            two.clone() * t13.clone() * t23.clone() * t34.clone() * t124.clone() + t123.clone() * t134.clone() * t234.clone(),
        ],
        vec![
            t234.clone() * t14.clone(),
            t134.clone() * t24.clone(),
            t124.clone() * t34.clone(),
            two.clone() * t14 * t24 * t34 * t123 + t124 * t134 * t234,
        ],
    ];
    Ok(Matrix::from_rows(rows).det() / two)
}

/// Numeric higher-order test. `value` is the product over sign assignments of the factors;
/// `relative` is the smallest `|factor| / scale` where `scale` sums the magnitudes of the terms
/// in that factor. On genuine minors one factor vanishes, so `relative` is at rounding level.
#[derive(Clone, Debug, PartialEq)]
pub struct NansonValue {
    pub value: Complex64,
    pub log10_abs: f64,
    pub relative: f64,
    pub factors: Vec<Complex64>,
}

/// Cyclic orders of `{2, …, n}` starting at 2, both orientations.
fn cycles(n: usize) -> Vec<Vec<usize>> {
    fn perms(rest: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == rest.len() {
            out.push(rest.clone());
            return;
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            perms(rest, k + 1, out);
            rest.swap(k, i);
        }
    }
    let mut rest: Vec<usize> = (3..=n).collect();
    let mut out = Vec::new();
    perms(&mut rest, 0, &mut out);
    out.into_iter()
        .map(|p| {
            let mut c = vec![2];
            c.extend(p);
            c
        })
        .collect()
}

/// `(2^{n−1} T_{12}⋯T_{1n} T_{2…n} − Σ_σ ∏ (T_{1pq} ± s_{pq} R_{pq})) / 2` for every sign
/// assignment `s` with the first sign fixed, then multiplied together.
pub fn nanson_n<T: Scalar>(t: &ClusterTable<T>, n: usize) -> Result<NansonValue, PmapError> {
    if n > MAX_NANSON_SIZE {
        return Err(PmapError::SizeLimit { n, limit: MAX_NANSON_SIZE });
    }
    if n < 4 || t.n() != n {
        return Err(PmapError::WrongSize { expected: n.max(4), got: t.n() });
    }
    let tc = |idx: &[usize]| t.by_mask(mask_of(idx)).to_c64();
    let pairs: Vec<(usize, usize)> = (2..=n).flat_map(|p| (p + 1..=n).map(move |q| (p, q))).collect();
    let pair_index = |p: usize, q: usize| pairs.iter().position(|&e| e == (p.min(q), p.max(q))).unwrap();
    let t1: Vec<Complex64> = pairs.iter().map(|&(p, q)| tc(&[1, p, q])).collect();
    let r: Vec<Complex64> = pairs
        .iter()
        .zip(&t1)
        .map(|(&(p, q), a)| (a * a - 4.0 * tc(&[1, p]) * tc(&[1, q]) * tc(&[p, q])).sqrt())
        .collect();
    let rest: Vec<usize> = (2..=n).collect();
    let lhs = Complex64::new(2f64.powi(n as i32 - 1), 0.0) * rest.iter().map(|&i| tc(&[1, i])).product::<Complex64>() * tc(&rest);
    let cyc = cycles(n);
    let k = pairs.len();
    let mut factors = Vec::with_capacity(1 << (k - 1));
    let mut relative = f64::INFINITY;
    for bits in 0..1usize << (k - 1) {
        // sign of R_{pair 0} is fixed to +
        let sign = |e: usize| if e == 0 || bits >> (e - 1) & 1 == 0 { 1.0 } else { -1.0 };
        let mut sum = Complex64::new(0.0, 0.0);
        let mut scale = lhs.norm();
        for c in &cyc {
            let mut prod = Complex64::new(1.0, 0.0);
            let mut mag = 1.0;
            for i in 0..c.len() {
                let (p, q) = (c[i], c[(i + 1) % c.len()]);
                let e = pair_index(p, q);
                let dir = if p < q { 1.0 } else { -1.0 };
                prod *= t1[e] + dir * sign(e) * r[e];
                mag *= t1[e].norm() + r[e].norm();
            }
            sum += prod;
            scale += mag;
        }
        let f = (lhs - sum) / 2.0;
        let rel = if scale > 0.0 { 2.0 * f.norm() / scale } else { 0.0 };
        relative = relative.min(rel);
        factors.push(f);
    }
    let value = factors.iter().product();
    let log10_abs = factors.iter().map(|f| f.norm().log10()).sum();
    Ok(NansonValue { value, log10_abs, relative, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_counts() {
        assert_eq!(cycles(4).len(), 2);
        assert_eq!(cycles(5).len(), 6);
        assert!(cycles(6).iter().all(|c| c[0] == 2 && c.len() == 5));
    }
}
