use crate::cubic::{cubic_coefficients, discriminant, solve_cubic};
use crate::{AsymptoticParams, LimitShapeError};

/// A point of the frozen boundary with its real double critical point `z`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryPoint {
    pub z: f64,
    pub xi: f64,
    pub tau: f64,
}

/// `(ξ(z), τ(z))` on the whole discriminant curve, or `PoleProximity` near `z = y` or `z = 1/x`.
pub fn boundary_point(p: &AsymptoticParams, z: f64) -> Result<BoundaryPoint, LimitShapeError> {
    let (x, y, b) = (p.x, p.y, p.beta);
    let den = (1.0 - x * z).powi(2) * (y - z).powi(2);
    if den.abs() < 1e-14 * (1.0 + z * z).powi(2) {
        return Err(LimitShapeError::PoleProximity(z));
    }
    let xi = (1.0 - x * y) * (y * (b + x * z * z - 2.0 * z) + z * z * (1.0 - b * x)) / den;
    let tau = 1.0 + (z - b).powi(2) * (1.0 - x * y) * (y - x * z * z) / (-b * den);
    Ok(BoundaryPoint { z, xi, tau })
}

/// Physical part (`ξ ≥ 0`, `0 ≤ τ ≤ 1`) of the boundary sampled at `zs`; poles are skipped.
pub fn frozen_boundary(p: &AsymptoticParams, zs: &[f64]) -> Vec<BoundaryPoint> {
    zs.iter()
        .filter_map(|&z| boundary_point(p, z).ok())
        .filter(|bp| bp.xi >= 0.0 && (0.0..=1.0).contains(&bp.tau))
        .collect()
}

/// A parameter grid covering the boundary: dense around the poles and `β`, a tail toward ±∞, and
/// uniform refinement across every physical stretch.
pub fn boundary_z_grid(p: &AsymptoticParams, n: usize) -> Vec<f64> {
    let mut zs: Vec<f64> = Vec::with_capacity(n);
    // z = tan(θ) covers the real line; skipping the endpoints avoids ±∞
    for k in 1..n {
        let theta = -std::f64::consts::FRAC_PI_2 + std::f64::consts::PI * k as f64 / n as f64;
        let s = theta.tan();
        zs.push(s * s.abs() * p.beta.abs().max(1.0));
    }
    for c in [p.beta, 0.0, p.y, 1.0 / p.x] {
        let scale = c.abs().max(1e-3);
        for k in 1..=n / 8 {
            let d = scale * 1e-4 * (1e4f64).powf(k as f64 / (n / 8) as f64);
            zs.push(c - d);
            zs.push(c + d);
        }
    }
    zs.sort_by(f64::total_cmp);
    // refine each physical run, widened by one coarse point on either side
    let physical = |z: f64| boundary_point(p, z).is_ok_and(|bp| bp.xi >= 0.0 && (0.0..=1.0).contains(&bp.tau));
    let mask: Vec<bool> = zs.iter().map(|&z| physical(z)).collect();
    let mut extra = Vec::new();
    let mut k = 0;
    while k < zs.len() {
        if !mask[k] {
            k += 1;
            continue;
        }
        let start = k.saturating_sub(1);
        while k < zs.len() && mask[k] {
            k += 1;
        }
        let (lo, hi) = (zs[start], zs[k.min(zs.len() - 1)]);
        extra.extend((1..n / 4).map(|j| lo + (hi - lo) * j as f64 / (n / 4) as f64));
    }
    zs.extend(extra);
    zs.sort_by(f64::total_cmp);
    zs.dedup();
    zs
}

/// Residuals `|P|` and `|P′|` of the cubic at `(ξ(z), τ(z))` and `z`, each divided by the sum of
/// term magnitudes.
pub fn double_root_residuals(p: &AsymptoticParams, bp: &BoundaryPoint) -> (f64, f64) {
    let [a, b, c, d] = cubic_coefficients(p, bp.xi, bp.tau);
    let z = bp.z;
    let v = ((a * z + b) * z + c) * z + d;
    let sv = ((a.abs() * z.abs() + b.abs()) * z.abs() + c.abs()) * z.abs() + d.abs();
    let dv = (3.0 * a * z + 2.0 * b) * z + c;
    let sdv = (3.0 * a.abs() * z.abs() + 2.0 * b.abs()) * z.abs() + c.abs();
    (v.abs() / sv.max(f64::MIN_POSITIVE), dv.abs() / sdv.max(f64::MIN_POSITIVE))
}

/// The cusp of the boundary and the discriminant of its defining cubic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cusp {
    pub z: f64,
    pub xi: f64,
    pub tau: f64,
    pub discriminant: f64,
    pub closed_form: f64,
}

/// Coefficients of `x(1 + xy − xβ) z³ − 3xy z² + 3xyβ z + y(y − β − xyβ)`.
pub fn cusp_cubic(p: &AsymptoticParams) -> [f64; 4] {
    let (x, y, b) = (p.x, p.y, p.beta);
    [x * (1.0 + x * y - x * b), -3.0 * x * y, 3.0 * x * y * b, y * (y - b - x * y * b)]
}

pub fn cusp_point(p: &AsymptoticParams) -> Result<Cusp, LimitShapeError> {
    let c = cusp_cubic(p);
    let (x, y, b) = (p.x, p.y, p.beta);
    let closed_form = -27.0 * (x * y * (1.0 - x * b) * (1.0 - x * y) * (y - b)).powi(2);
    let disc = discriminant(c);
    let z = solve_cubic(c)?
        .into_iter()
        .min_by(|u, v| u.im.abs().total_cmp(&v.im.abs()))
        .map(|z| z.re)
        .ok_or(LimitShapeError::DegenerateAllZero)?;
    let bp = boundary_point(p, z)?;
    Ok(Cusp { z, xi: bp.xi, tau: bp.tau, discriminant: disc, closed_form })
}
