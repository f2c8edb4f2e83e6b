use std::f64::consts::PI;

use groth_core::Complex64;

use crate::cubic::{bisect, cubic_coefficients, discriminant, double_root, real_roots, solve_cubic};
use crate::zones::{gradient_at, zone_of_real};
use crate::{AsymptoticParams, LimitShapeError, LiquidPoint, Zone};

/// A maximal stretch `[lo, hi]` of one kind along a horizontal line. Frozen pieces carry the real
/// double root at the boundary they share with a liquid piece.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Piece {
    pub lo: f64,
    pub hi: f64,
    pub zone: Zone,
    pub z: f64,
}

/// The height function `ξ ↦ 𝔥(ξ, τ)` on one horizontal line, integrated from the right.
#[derive(Clone, Debug)]
pub struct HeightRow {
    p: AsymptoticParams,
    tau: f64,
    pieces: Vec<Piece>,
    /// `𝔥` at the right end of each piece.
    h_right: Vec<f64>,
    h_zero: f64,
}

const QUAD_TOL: f64 = 1e-11;

/// Discriminant of the cubic as a polynomial in `ξ`, low to high.
fn discriminant_poly(p: &AsymptoticParams, tau: f64) -> Vec<f64> {
    let c0 = cubic_coefficients(p, 0.0, tau);
    let c1 = cubic_coefficients(p, 1.0, tau);
    // each coefficient is linear in ξ: value(0) + slope·ξ
    let lin = |k: usize| vec![c0[k], c1[k] - c0[k]];
    let mul = |u: &[f64], v: &[f64]| {
        let mut out = vec![0.0; u.len() + v.len() - 1];
        for (i, a) in u.iter().enumerate() {
            for (j, b) in v.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        out
    };
    let prod = |fs: &[&[f64]], k: f64| {
        let mut acc = vec![k];
        for f in fs {
            acc = mul(&acc, f);
        }
        acc
    };
    let (a, b, c, d) = (lin(0), lin(1), lin(2), lin(3));
    let terms = [
        prod(&[&a, &b, &c, &d], 18.0),
        prod(&[&b, &b, &b, &d], -4.0),
        prod(&[&b, &b, &c, &c], 1.0),
        prod(&[&a, &c, &c, &c], -4.0),
        prod(&[&a, &a, &d, &d], -27.0),
    ];
    let mut out = vec![0.0; 5];
    for t in terms {
        for (k, v) in t.into_iter().enumerate() {
            out[k] += v;
        }
    }
    out
}

impl HeightRow {
    pub fn new(p: &AsymptoticParams, tau: f64) -> Result<Self, LimitShapeError> {
        let disc = |xi: f64| discriminant(cubic_coefficients(p, xi, tau));
        // boundary crossings: roots of the quartic, refined on the direct formula
        let mut cuts: Vec<f64> = Vec::new();
        let approx = real_roots(&discriminant_poly(p, tau));
        for r in approx.into_iter().filter(|r| *r > 0.0) {
            let w = 1e-9 * r.max(1.0);
            let refined = bisect(&disc, (r - w).max(0.0), r + w).unwrap_or(r);
            cuts.push(refined);
        }
        cuts.sort_by(f64::total_cmp);
        cuts.dedup_by(|a, b| (*a - *b).abs() <= 1e-14 * b.abs().max(1.0));

        let mut bounds = vec![0.0];
        bounds.extend(cuts.iter().copied());
        let mut pieces: Vec<Piece> = Vec::with_capacity(bounds.len());
        for (i, &lo) in bounds.iter().enumerate() {
            let hi = bounds.get(i + 1).copied().unwrap_or(f64::INFINITY);
            let probe = if hi.is_finite() { 0.5 * (lo + hi) } else { lo + 1.0 + lo };
            let zone = if disc(probe) < 0.0 { Zone::Liquid } else { Zone::Ia };
            pieces.push(Piece { lo, hi, zone, z: f64::NAN });
        }
        // merge neighbours of the same kind (tangential crossings)
        let mut merged: Vec<Piece> = Vec::with_capacity(pieces.len());
        for pc in pieces {
            match merged.last_mut() {
                Some(last) if (last.zone == Zone::Liquid) == (pc.zone == Zone::Liquid) => last.hi = pc.hi,
                _ => merged.push(pc),
            }
        }
        let mut pieces = merged;
        let k = pieces.len();
        for i in 0..k {
            if pieces[i].zone == Zone::Liquid {
                continue;
            }
            let left_liquid = i > 0 && pieces[i - 1].zone == Zone::Liquid;
            let right_liquid = i + 1 < k && pieces[i + 1].zone == Zone::Liquid;
            let at = if right_liquid && pieces[i].hi.is_finite() {
                pieces[i].hi
            } else if left_liquid {
                pieces[i].lo
            } else {
                return Err(LimitShapeError::BoundaryDetectionFailed(format!("no liquid region on the line τ = {tau}")));
            };
            let z = double_root(cubic_coefficients(p, at, tau));
            let mut zone = zone_of_real(z, p.beta);
            if zone == Zone::Ia && i + 1 < k {
                zone = Zone::Ib;
            }
            pieces[i].zone = zone;
            pieces[i].z = z;
        }
        match pieces.last() {
            Some(last) if last.zone == Zone::Ia => {}
            _ => return Err(LimitShapeError::BoundaryDetectionFailed(format!("the line τ = {tau} does not end in an empty zone"))),
        }
        let mut row = Self { p: *p, tau, pieces, h_right: vec![0.0; k], h_zero: 0.0 };
        let mut h = 0.0;
        for i in (0..k).rev() {
            row.h_right[i] = h;
            let pc = row.pieces[i];
            if pc.hi.is_finite() {
                h += row.increment(i, pc.lo);
            }
        }
        row.h_zero = h;
        Ok(row)
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Liquid-region crossings, increasing.
    pub fn boundary(&self) -> Vec<f64> {
        self.pieces.iter().skip(1).map(|pc| pc.lo).collect()
    }

    /// Upper half-plane critical point at a liquid `ξ`.
    pub fn z_c(&self, xi: f64) -> Complex64 {
        let roots = solve_cubic(cubic_coefficients(&self.p, xi, self.tau)).unwrap_or_default();
        let z = roots.into_iter().max_by(|a, b| a.im.total_cmp(&b.im)).unwrap_or_default();
        Complex64::new(z.re, z.im.abs())
    }

    fn arg_over_pi(&self, xi: f64) -> f64 {
        let z = self.z_c(xi);
        z.im.atan2(z.re) / PI
    }

    fn piece_index(&self, xi: f64) -> usize {
        self.pieces.iter().position(|pc| xi < pc.hi).unwrap_or(self.pieces.len() - 1)
    }

    pub fn classify(&self, xi: f64) -> Result<LiquidPoint, LimitShapeError> {
        let pc = self.pieces[self.piece_index(xi)];
        let z_c = if pc.zone == Zone::Liquid { self.z_c(xi) } else { Complex64::new(pc.z, 0.0) };
        Ok(LiquidPoint { xi, tau: self.tau, z_c, zone: pc.zone })
    }

    /// `∂_ξ 𝔥` at `ξ`.
    pub fn slope(&self, xi: f64) -> f64 {
        let pc = self.pieces[self.piece_index(xi)];
        match pc.zone {
            Zone::Liquid => -self.arg_over_pi(xi),
            _ => gradient_at(Complex64::new(pc.z, 0.0), self.p.beta).0,
        }
    }

    /// `𝔥(ξ) − 𝔥(hi)` inside piece `i`.
    fn increment(&self, i: usize, xi: f64) -> f64 {
        let pc = self.pieces[i];
        if !pc.hi.is_finite() {
            return 0.0;
        }
        match pc.zone {
            Zone::Liquid => {
                // ξ = lo + (hi − lo)(1 − cos θ)/2 smooths the square-root ends
                let half = 0.5 * (pc.hi - pc.lo);
                let theta = |s: f64| (1.0 - (s - pc.lo) / half).clamp(-1.0, 1.0).acos();
                let f = |t: f64| self.arg_over_pi(pc.lo + half * (1.0 - t.cos())) * half * t.sin();
                adaptive_simpson(&f, theta(xi), PI, QUAD_TOL)
            }
            _ => -gradient_at(Complex64::new(pc.z, 0.0), self.p.beta).0 * (pc.hi - xi),
        }
    }

    /// `𝔥(ξ, τ)`.
    pub fn h(&self, xi: f64) -> f64 {
        let i = self.piece_index(xi.max(0.0));
        self.h_right[i] + self.increment(i, xi.max(0.0))
    }

    /// `𝔥(0, τ)`, which should be 1.
    pub fn total(&self) -> f64 {
        self.h_zero
    }

    fn h_left(&self, i: usize) -> f64 {
        if i == 0 {
            self.h_zero
        } else {
            self.h_right[i - 1]
        }
    }

    /// Smallest `ξ` with `𝔥(ξ, τ) = level`.
    pub fn solve_level(&self, level: f64) -> Result<f64, LimitShapeError> {
        let k = self.pieces.len();
        if level <= 0.0 {
            return Ok(self.pieces[k - 1].lo);
        }
        let h_left = |i: usize| self.h_left(i);
        if h_left(0) < level - 1e-9 {
            return Err(LimitShapeError::NoRoot { tau: self.tau, level });
        }
        let i = (0..k).rev().find(|&i| h_left(i) >= level).unwrap_or(0);
        let pc = self.pieces[i];
        let base = self.h_right[i];
        if pc.zone != Zone::Liquid {
            let g = -gradient_at(Complex64::new(pc.z, 0.0), self.p.beta).0;
            if g == 0.0 {
                return Ok(pc.lo);
            }
            return Ok((pc.hi - (level - base) / g).max(pc.lo));
        }
        let f = |s: f64| self.increment(i, s) + base - level;
        Ok(bisect(&f, pc.lo, pc.hi).unwrap_or(pc.lo))
    }
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    // the tolerance is shared out by width, so noise in f cannot force unbounded refinement
    let density = tol / (b - a);
    #[allow(clippy::too_many_arguments)]
    fn rec(f: &impl Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, density: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * density * (b - a) {
            return left + right + delta / 15.0;
        }
        rec(f, a, m, fa, flm, fm, left, density, depth - 1) + rec(f, m, b, fm, frm, fb, right, density, depth - 1)
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    // split once so that a symmetric integrand cannot fool the first estimate
    let m = 0.5 * (a + b);
    let (fl, fr) = (f(0.5 * (a + m)), f(0.5 * (m + b)));
    let left = (m - a) / 6.0 * (fa + 4.0 * fl + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * fr + fb);
    rec(f, a, m, fa, fl, fm, left, density, 16) + rec(f, m, b, fm, fr, fb, right, density, 16)
}
