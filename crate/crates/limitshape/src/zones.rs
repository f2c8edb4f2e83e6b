use std::f64::consts::PI;

use groth_core::Complex64;

use crate::{AsymptoticParams, HeightRow, LimitShapeError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Zone {
    /// Frozen, empty: `∇𝔥 = (0, 0)`, `𝔥 = 0`.
    Ia,
    /// Frozen, full: `∇𝔥 = (0, 0)`, `𝔥 = 1`.
    Ib,
    /// Diagonal paths: `∇𝔥 = (−1, −1)`.
    II,
    /// Vertical paths: `∇𝔥 = (−1, 0)`.
    III,
    Liquid,
}

impl std::fmt::Display for Zone {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Zone::Ia => "Ia",
            Zone::Ib => "Ib",
            Zone::II => "II",
            Zone::III => "III",
            Zone::Liquid => "liquid",
        };
        f.write_str(s)
    }
}

/// A point with its critical point: the upper half-plane root when liquid, otherwise the real
/// double root at the adjacent boundary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LiquidPoint {
    pub xi: f64,
    pub tau: f64,
    pub z_c: Complex64,
    pub zone: Zone,
}

/// Argument in `[0, π]`, the value on the real axis taken from above.
fn arg_upper(z: Complex64) -> f64 {
    z.im.abs().atan2(z.re)
}

/// `(−Arg z/π, (Arg(z − β) − Arg z)/π)`.
pub fn gradient_at(z: Complex64, beta: f64) -> (f64, f64) {
    let a0 = arg_upper(z);
    let ab = arg_upper(z - beta);
    (-a0 / PI, (ab - a0) / PI)
}

pub fn height_gradient(lp: &LiquidPoint, p: &AsymptoticParams) -> (f64, f64) {
    match lp.zone {
        Zone::Ia | Zone::Ib => (0.0, 0.0),
        Zone::II => (-1.0, -1.0),
        Zone::III => (-1.0, 0.0),
        Zone::Liquid => gradient_at(lp.z_c, p.beta),
    }
}

/// Zone of a real double root by its position relative to `β` and `0`.
pub fn zone_of_real(z: f64, beta: f64) -> Zone {
    if z > 0.0 {
        Zone::Ia
    } else if z > beta {
        Zone::II
    } else {
        Zone::III
    }
}

pub fn classify_point(p: &AsymptoticParams, xi: f64, tau: f64) -> Result<LiquidPoint, LimitShapeError> {
    HeightRow::new(p, tau)?.classify(xi)
}
