use std::f64::consts::PI;

use groth_core::Complex64;
use groth_measures::GrothendieckModel;

use crate::{KernelQuery, Schur2dError};

/// Radii of the two circles used for a given level pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContourRadii {
    pub z: f64,
    pub w: f64,
}

/// Double contour integral form of the Schur-process kernel, evaluated by the trapezoidal rule on
/// two circles.
#[derive(Clone, Debug)]
pub struct ContourKernel {
    xs: Vec<f64>,
    ys: Vec<f64>,
    betas: Vec<f64>,
}

impl ContourKernel {
    pub fn new(m: &GrothendieckModel<f64>) -> Self {
        let p = m.params();
        Self { xs: p.xs().to_vec(), ys: p.ys().to_vec(), betas: p.betas().to_vec() }
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }

    /// `F_t(z) = ∏ (1 − y_i/z)/(1 − z x_i) ∏_{r ≥ t} 1/(1 − β_r/z)`.
    pub fn f(&self, t: usize, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        let mut v = one;
        for (x, y) in self.xs.iter().zip(&self.ys) {
            v *= (one - y / z) / (one - z * x);
        }
        for b in &self.betas[t - 1..] {
            v /= one - b / z;
        }
        v
    }

    /// `1 / F_s(w)`, written out so that zeros of `F_s` cause no trouble.
    pub fn f_inv(&self, s: usize, w: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        let mut v = one;
        for (x, y) in self.xs.iter().zip(&self.ys) {
            v *= (one - w * x) / (one - y / w);
        }
        for b in &self.betas[s - 1..] {
            v *= one - b / w;
        }
        v
    }

    /// Circles with `max|β_{r≥t}| < R_z < min 1/x_i`, `R_w > max y_i`, and `R_z > R_w` iff `t ≤ s`.
    /// Only the β's entering `F_t` constrain `R_z`.
    pub fn radii(&self, t: usize, s: usize) -> Result<ContourRadii, Schur2dError> {
        let hi = self.xs.iter().map(|x| if *x > 0.0 { 1.0 / x } else { f64::INFINITY }).fold(f64::INFINITY, f64::min);
        let hi = if hi.is_finite() { hi } else { 1e3 };
        let bmax = self.betas[t - 1..].iter().map(|b| b.abs()).fold(0.0, f64::max);
        let ymax = self.ys.iter().map(|y| y.abs()).fold(0.0, f64::max);
        if t <= s {
            let lo = bmax.max(ymax);
            if lo >= hi {
                return Err(Schur2dError::ContourInfeasible(format!("need max(|β|, y) = {lo} < min 1/x = {hi}")));
            }
            let z = if lo > 0.0 { (lo * hi).sqrt() } else { hi / 2.0 };
            let w = if ymax > 0.0 { (ymax * z).sqrt() } else { z / 2.0 };
            Ok(ContourRadii { z, w })
        } else {
            if bmax >= hi {
                return Err(Schur2dError::ContourInfeasible(format!("need max|β| = {bmax} < min 1/x = {hi}")));
            }
            let z = if bmax > 0.0 { (bmax * hi).sqrt() } else { hi / 2.0 };
            Ok(ContourRadii { z, w: 2.0 * z.max(ymax) })
        }
    }

    /// `K(a, t; b, s)` with `nodes` points on each circle.
    pub fn eval(&self, q: KernelQuery, nodes: usize) -> Result<Complex64, Schur2dError> {
        let n = self.n();
        for level in [q.t, q.s] {
            if !(1..=n).contains(&level) {
                return Err(Schur2dError::LevelOutOfRange { level, n });
            }
        }
        let r = self.radii(q.t, q.s)?;
        let circle = |rad: f64| -> Vec<Complex64> {
            (0..nodes).map(|k| Complex64::from_polar(rad, 2.0 * PI * k as f64 / nodes as f64)).collect()
        };
        let zs = circle(r.z);
        let ws = circle(r.w);
        // z · z^{−(a−N+1)} F_t(z) and w · w^{b−N} / F_s(w); the extra factor is dz/(i dθ)
        let ez = q.a as i32 - n as i32;
        let fz: Vec<Complex64> = zs.iter().map(|&z| z.powi(-ez) * self.f(q.t, z)).collect();
        let eb = q.b as i32 - n as i32 + 1;
        let gw: Vec<Complex64> = ws.iter().map(|&w| w.powi(eb) * self.f_inv(q.s, w)).collect();
        let mut acc = Complex64::new(0.0, 0.0);
        for (z, fz) in zs.iter().zip(&fz) {
            let mut inner = Complex64::new(0.0, 0.0);
            for (w, gw) in ws.iter().zip(&gw) {
                inner += gw / (z - w);
            }
            acc += fz * inner;
        }
        Ok(acc / (nodes * nodes) as f64)
    }
}

/// One-shot form of [`ContourKernel::eval`].
pub fn contour_kernel(m: &GrothendieckModel<f64>, q: KernelQuery, nodes: usize) -> Result<Complex64, Schur2dError> {
    ContourKernel::new(m).eval(q, nodes)
}
