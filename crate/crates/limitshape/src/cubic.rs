use groth_core::Complex64;

use crate::{AsymptoticParams, LimitShapeError};

/// Coefficients `[a, b, c, d]` of the critical point cubic `a z³ + b z² + c z + d`.
pub fn cubic_coefficients(p: &AsymptoticParams, xi: f64, tau: f64) -> [f64; 4] {
    let (x, y, b) = (p.x, p.y, p.beta);
    [
        xi * x,
        -(xi + b * x * (xi + tau - 1.0) + (xi + 1.0) * x * y - 1.0),
        b * (xi + tau + xi * x * y + tau * x * y - 2.0) + xi * y,
        -b * y * (xi + tau - 1.0),
    ]
}

/// `18abcd − 4b³d + b²c² − 4ac³ − 27a²d²`; negative iff there are two nonreal roots.
pub fn discriminant([a, b, c, d]: [f64; 4]) -> f64 {
    18.0 * a * b * c * d - 4.0 * b.powi(3) * d + b * b * c * c - 4.0 * a * c.powi(3) - 27.0 * a * a * d * d
}

fn eval(c: &[f64; 4], z: Complex64) -> (Complex64, Complex64) {
    let v = ((z * c[0] + c[1]) * z + c[2]) * z + c[3];
    let dv = (z * (3.0 * c[0]) + 2.0 * c[1]) * z + c[2];
    (v, dv)
}

fn polish(c: &[f64; 4], z: Complex64) -> Complex64 {
    let (v, dv) = eval(c, z);
    if dv.norm() == 0.0 {
        return z;
    }
    let next = z - v / dv;
    if eval(c, next).0.norm() <= v.norm() {
        next
    } else {
        z
    }
}

/// All roots of a real polynomial of degree ≤ 3, from Cardano's formula followed by a Newton
/// step. A vanishing leading coefficient drops the degree.
pub fn solve_cubic(c: [f64; 4]) -> Result<Vec<Complex64>, LimitShapeError> {
    let scale = c.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return Err(LimitShapeError::DegenerateAllZero);
    }
    let tiny = 1e-15 * scale;
    let [a, b, cc, d] = c;
    let roots = if a.abs() > tiny {
        let d0 = b * b - 3.0 * a * cc;
        let d1 = 2.0 * b.powi(3) - 9.0 * a * b * cc + 27.0 * a * a * d;
        let s = Complex64::new(d1 * d1 - 4.0 * d0.powi(3), 0.0).sqrt();
        let plus = (d1 + s) / 2.0;
        let minus = (d1 - s) / 2.0;
        let big = if plus.norm() >= minus.norm() { plus } else { minus };
        let cbrt = big.powf(1.0 / 3.0);
        if cbrt.norm() == 0.0 {
            vec![Complex64::new(-b / (3.0 * a), 0.0); 3]
        } else {
            let omega = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
            let mut r = Vec::with_capacity(3);
            let mut k = Complex64::new(1.0, 0.0);
            for _ in 0..3 {
                let ck = k * cbrt;
                r.push(-(b + ck + d0 / ck) / (3.0 * a));
                k *= omega;
            }
            r
        }
    } else if b.abs() > tiny {
        let disc = Complex64::new(cc * cc - 4.0 * b * d, 0.0).sqrt();
        // stable pair: q = −(c + sign(c)·√disc)/2
        let q = if cc >= 0.0 { -(cc + disc) / 2.0 } else { -(cc - disc) / 2.0 };
        if q.norm() == 0.0 {
            vec![Complex64::new(0.0, 0.0); 2]
        } else {
            vec![q / b, d / q]
        }
    } else if cc.abs() > tiny {
        vec![Complex64::new(-d / cc, 0.0)]
    } else {
        return Err(LimitShapeError::DegenerateAllZero);
    };
    Ok(roots.into_iter().map(|z| polish(&c, polish(&c, z))).collect())
}

pub fn cubic_roots(p: &AsymptoticParams, xi: f64, tau: f64) -> Result<Vec<Complex64>, LimitShapeError> {
    solve_cubic(cubic_coefficients(p, xi, tau))
}

/// `|P(z)|` over the sum of term magnitudes, floored at machine precision times the largest
/// coefficient so that an exact root at 0 is not judged termwise.
pub fn relative_residual(c: &[f64; 4], z: Complex64) -> f64 {
    let r = z.norm();
    let floor = f64::EPSILON * c.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let scale = c[0].abs() * r.powi(3) + c[1].abs() * r * r + c[2].abs() * r + c[3].abs() + floor;
    eval(c, z).0.norm() / scale.max(f64::MIN_POSITIVE)
}

/// Double root of a cubic with vanishing discriminant; the triple root when `b² = 3ac`.
pub fn double_root([a, b, c, d]: [f64; 4]) -> f64 {
    let den = 2.0 * (b * b - 3.0 * a * c);
    if den.abs() > 1e-14 * (b * b).max((a * c).abs()) {
        (9.0 * a * d - b * c) / den
    } else if a != 0.0 {
        -b / (3.0 * a)
    } else {
        -c / (2.0 * b)
    }
}

/// Real roots of `Σ c_k ξ^k` (coefficients low to high), found by bisection between the roots of
/// the derivative. Roots of even multiplicity may be missed.
pub fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let scale = coeffs.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut c = coeffs.to_vec();
    while c.len() > 1 && c.last().is_some_and(|v| v.abs() <= 1e-14 * scale) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let lead = *c.last().unwrap();
    let bound = 1.0 + c[..c.len() - 1].iter().map(|v| (v / lead).abs()).fold(0.0, f64::max);
    let deriv: Vec<f64> = c.iter().enumerate().skip(1).map(|(k, v)| k as f64 * v).collect();
    let mut knots = vec![-bound];
    knots.extend(real_roots(&deriv).into_iter().filter(|r| r.abs() < bound));
    knots.push(bound);
    let f = |t: f64| c.iter().rev().fold(0.0, |acc, v| acc * t + v);
    let mut roots = Vec::new();
    for w in knots.windows(2) {
        if let Some(r) = bisect(&f, w[0], w[1]) {
            roots.push(r);
        }
    }
    roots
}

pub(crate) fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> Option<f64> {
    let (mut flo, fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return Some(lo);
    }
    if fhi == 0.0 {
        return Some(hi);
    }
    if flo.signum() == fhi.signum() {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}
