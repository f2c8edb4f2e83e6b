use groth_core::Complex64;

use crate::{AsymptoticParams, HeightRow, LimitShapeError, Zone};

/// `|∂_ξ z_c − (1 − z_c/β) ∂_τ z_c|` by central differences with step `h`.
pub fn burgers_residual(p: &AsymptoticParams, xi: f64, tau: f64, h: f64) -> Result<f64, LimitShapeError> {
    let mid = HeightRow::new(p, tau)?;
    let up = HeightRow::new(p, tau + h)?;
    let down = HeightRow::new(p, tau - h)?;
    let z = |row: &HeightRow, s: f64| -> Result<Complex64, LimitShapeError> {
        let lp = row.classify(s)?;
        if lp.zone != Zone::Liquid {
            return Err(LimitShapeError::StencilLeavesLiquid { xi: s, tau: row.tau() });
        }
        Ok(lp.z_c)
    };
    let zc = z(&mid, xi)?;
    let dxi = (z(&mid, xi + h)? - z(&mid, xi - h)?) / (2.0 * h);
    let dtau = (z(&up, xi)? - z(&down, xi)?) / (2.0 * h);
    Ok((dxi - (1.0 - zc / p.beta) * dtau).norm())
}
