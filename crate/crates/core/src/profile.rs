use crate::{CoreError, Partition};

/// Piecewise-linear boundary `v = 𝔚_N(u)` of a Young diagram drawn rotated by 45°.
///
/// A box in row `i`, column `j` (both 1-based) occupies the square with corners
/// `(j − i, j + i − 2) … (j − i, j + i)`; the end of row `i` sits at `(λ_i − i, λ_i + i)`.
/// Between the first and last breakpoint the profile interpolates linearly, outside it is `|u|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    breakpoints: Vec<(i64, i64)>,
}

/// Profile of `λ` viewed as a configuration with `n` rows.
pub fn profile_of(lambda: &Partition, n: usize) -> Result<Profile, CoreError> {
    lambda.check_cap(n)?;
    let n = n as i64;
    let part = |i: i64| lambda.part(i as usize) as i64;
    let mut walk = vec![(-n, n)];
    for i in (1..=n).rev() {
        walk.push((part(i) - i, part(i) + i));
        walk.push((part(i) - i + 1, part(i) + i - 1));
    }
    walk.dedup();
    // keep only slope changes
    let mut pts: Vec<(i64, i64)> = Vec::with_capacity(walk.len());
    for p in walk {
        if pts.len() >= 2 {
            let (a, b) = (pts[pts.len() - 2], pts[pts.len() - 1]);
            if (b.1 - a.1) * (p.0 - b.0) == (p.1 - b.1) * (b.0 - a.0) {
                pts.pop();
            }
        }
        pts.push(p);
    }
    let on_abs = |p: &(i64, i64)| p.1 == p.0.abs();
    let first = pts.iter().rposition(|p| p.0 <= 0 && on_abs(p)).unwrap_or(0);
    let last = pts.iter().position(|p| p.0 >= 0 && on_abs(p)).unwrap_or(pts.len() - 1);
    let mut breakpoints = pts[first.min(last)..=last.max(first)].to_vec();
    if breakpoints.iter().all(on_abs) {
        breakpoints = vec![(0, 0)];
    }
    Ok(Profile { breakpoints })
}

impl Profile {
    pub fn breakpoints(&self) -> &[(i64, i64)] {
        &self.breakpoints
    }

    pub fn eval(&self, u: f64) -> f64 {
        let bp = &self.breakpoints;
        let (u0, ul) = (bp[0].0 as f64, bp[bp.len() - 1].0 as f64);
        if u <= u0 || u >= ul {
            return u.abs();
        }
        let k = bp.partition_point(|p| (p.0 as f64) <= u);
        let (a, b) = (bp[k - 1], bp[k]);
        let t = (u - a.0 as f64) / (b.0 - a.0) as f64;
        a.1 as f64 + t * (b.1 - a.1) as f64
    }

    /// `N⁻¹ 𝔚_N(uN)`.
    pub fn eval_scaled(&self, u: f64, n: usize) -> f64 {
        let n = n as f64;
        self.eval(u * n) / n
    }

    /// `½ ∫ (𝔚 − |u|) du`, which counts boxes.
    pub fn norm(&self) -> u64 {
        let mut pts = Vec::with_capacity(self.breakpoints.len() + 1);
        for w in self.breakpoints.windows(2) {
            pts.push(w[0]);
            if w[0].0 < 0 && w[1].0 > 0 {
                let v = w[0].1 + (w[1].1 - w[0].1) * (-w[0].0) / (w[1].0 - w[0].0);
                pts.push((0, v));
            }
        }
        pts.push(*self.breakpoints.last().expect("profile has a breakpoint"));
        let d = |p: (i64, i64)| p.1 - p.0.abs();
        let four_norm: i64 = pts.windows(2).map(|w| (w[1].0 - w[0].0) * (d(w[0]) + d(w[1]))).sum();
        debug_assert_eq!(four_norm % 4, 0);
        (four_norm / 4) as u64
    }

    /// Slopes between consecutive breakpoints are ±1.
    pub fn is_unit_slope(&self) -> bool {
        self.breakpoints.windows(2).all(|w| (w[1].1 - w[0].1).abs() == w[1].0 - w[0].0)
    }

    pub fn to_csv(&self) -> String {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        wtr.write_record(["u", "v"]).expect("in-memory write");
        for (u, v) in &self.breakpoints {
            wtr.write_record([u.to_string(), v.to_string()]).expect("in-memory write");
        }
        String::from_utf8(wtr.into_inner().expect("in-memory flush")).expect("ascii csv")
    }

    pub fn from_csv(text: &str) -> Result<Self, CoreError> {
        let mut rdr = csv::Reader::from_reader(text.as_bytes());
        let mut breakpoints = Vec::new();
        for rec in rdr.deserialize::<(i64, i64)>() {
            breakpoints.push(rec.map_err(|e| CoreError::Csv(e.to_string()))?);
        }
        if breakpoints.is_empty() {
            return Err(CoreError::Csv("no breakpoints".into()));
        }
        Ok(Profile { breakpoints })
    }
}
