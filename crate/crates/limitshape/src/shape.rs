use rayon::prelude::*;

use crate::boundary::{boundary_z_grid, frozen_boundary, BoundaryPoint};
use crate::{AsymptoticParams, HeightRow, LimitShapeError};

/// Sampled surface `𝔥`, cross-section `𝔏`, rotated shape `𝔚` and frozen boundary.
#[derive(Clone, Debug)]
pub struct ShapeGrid {
    pub params: AsymptoticParams,
    pub tau_grid: Vec<f64>,
    pub xi_grid: Vec<f64>,
    /// `h[i][j] = 𝔥(xi_grid[j], tau_grid[i])`.
    pub h: Vec<Vec<f64>>,
    pub l: Vec<f64>,
    pub w: Vec<(f64, f64)>,
    pub boundary: Vec<BoundaryPoint>,
    rows: Vec<HeightRow>,
}

impl ShapeGrid {
    pub fn rows(&self) -> &[HeightRow] {
        &self.rows
    }
}

/// `k/n` for `k = 0..=n`.
pub fn uniform_taus(n: usize) -> Vec<f64> {
    (0..=n).map(|k| k as f64 / n as f64).collect()
}

fn build_rows(p: &AsymptoticParams, taus: &[f64]) -> Result<Vec<HeightRow>, LimitShapeError> {
    taus.par_iter().map(|&t| HeightRow::new(p, t)).collect()
}

/// `𝔥` on `taus × {0, step, …}` up to `xi_max`, by default 1.5 times the largest boundary `ξ`.
pub fn height_surface(p: &AsymptoticParams, taus: &[f64], xi_max: Option<f64>, step: f64) -> Result<ShapeGrid, LimitShapeError> {
    if step <= 0.0 || !step.is_finite() {
        return Err(LimitShapeError::InvalidParams(format!("ξ step must be positive, got {step}")));
    }
    let rows = build_rows(p, taus)?;
    let right = rows.iter().filter_map(|r| r.boundary().last().copied()).fold(0.0, f64::max);
    let xi_max = xi_max.unwrap_or(1.5 * right);
    let count = (xi_max / step).floor() as usize;
    let xi_grid: Vec<f64> = (0..=count).map(|k| k as f64 * step).collect();
    let h = rows.par_iter().map(|r| xi_grid.iter().map(|&xi| r.h(xi)).collect()).collect();
    let boundary = frozen_boundary(p, &boundary_z_grid(p, 4000));
    Ok(ShapeGrid { params: *p, tau_grid: taus.to_vec(), xi_grid, h, l: Vec::new(), w: Vec::new(), boundary, rows })
}

/// `𝔏(τ)` on the grid: the smallest `ξ` with `𝔥(ξ, τ) = τ`, and `𝔏(1) = 0`.
pub fn solve_l(sg: &ShapeGrid) -> Result<Vec<f64>, LimitShapeError> {
    sg.rows.par_iter().map(|r| if r.tau() >= 1.0 { Ok(0.0) } else { r.solve_level(r.tau()) }).collect()
}

/// `(𝔏(τ) − 1, 𝔏(τ) − 1 + 2τ)`.
pub fn shape_w(taus: &[f64], l: &[f64]) -> Vec<(f64, f64)> {
    taus.iter().zip(l).map(|(&t, &v)| (v - 1.0, v - 1.0 + 2.0 * t)).collect()
}

impl ShapeGrid {
    /// Fills `l` and `w`.
    pub fn solve(&mut self) -> Result<(), LimitShapeError> {
        self.l = solve_l(self)?;
        self.w = shape_w(&self.tau_grid, &self.l);
        Ok(())
    }
}

/// `𝔏` and `𝔚` without the surface.
#[derive(Clone, Debug)]
pub struct LimitShape {
    pub tau: Vec<f64>,
    pub l: Vec<f64>,
    /// `(u, 𝔚(u))` with `u` increasing.
    pub w: Vec<(f64, f64)>,
}

impl LimitShape {
    pub fn new(p: &AsymptoticParams, taus: &[f64]) -> Result<Self, LimitShapeError> {
        let rows = build_rows(p, taus)?;
        let l: Vec<f64> = rows.par_iter().map(|r| if r.tau() >= 1.0 { Ok(0.0) } else { r.solve_level(r.tau()) }).collect::<Result<_, _>>()?;
        let mut w = shape_w(taus, &l);
        w.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(Self { tau: taus.to_vec(), l, w })
    }

    /// `𝔚(u)` by linear interpolation, `|u|` outside the sampled range.
    pub fn w_at(&self, u: f64) -> f64 {
        let w = &self.w;
        if w.is_empty() || u <= w[0].0 || u >= w[w.len() - 1].0 {
            return u.abs();
        }
        let k = w.partition_point(|p| p.0 <= u);
        let (a, b) = (w[k - 1], w[k]);
        if b.0 == a.0 {
            return a.1;
        }
        a.1 + (u - a.0) / (b.0 - a.0) * (b.1 - a.1)
    }

    /// `sup_u |f(u) − 𝔚(u)|` over the shape's own `u` values and `extra`.
    pub fn sup_distance(&self, f: impl Fn(f64) -> f64, extra: &[f64]) -> f64 {
        self.w.iter().map(|p| p.0).chain(extra.iter().copied()).map(|u| (f(u) - self.w_at(u)).abs()).fold(0.0, f64::max)
    }
}

/// `Ω(u) = (2/π)(u arcsin(u/2) + √(4 − u²))` for `|u| ≤ 2`, `|u|` beyond.
pub fn vkls_omega(u: f64) -> f64 {
    if u.abs() >= 2.0 {
        return u.abs();
    }
    2.0 / std::f64::consts::PI * (u * (u / 2.0).asin() + (4.0 - u * u).sqrt())
}

/// `(xy)^{−1/2} sup_u |𝔚(u) − √(xy) Ω(u/√(xy))|`, with `τ` sampled densely where the shape is
/// curved: the first `4√(xy)` of the τ range carries the Plancherel-like part.
pub fn vkls_deviation(p: &AsymptoticParams, n: usize) -> Result<f64, LimitShapeError> {
    let s = (p.x * p.y).sqrt();
    let edge = (6.0 * s).min(1.0);
    let mut taus: Vec<f64> = (0..=n).map(|k| edge * k as f64 / n as f64).collect();
    taus.extend((1..=n / 4).map(|k| edge + (1.0 - edge) * k as f64 / (n / 4) as f64));
    let shape = LimitShape::new(p, &taus)?;
    let us: Vec<f64> = (0..=4 * n).map(|k| -3.0 * s + 6.0 * s * k as f64 / (4 * n) as f64).collect();
    Ok(shape.sup_distance(|u| s * vkls_omega(u / s), &us) / s)
}
