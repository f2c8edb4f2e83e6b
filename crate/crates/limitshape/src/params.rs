use crate::LimitShapeError;

/// Homogeneous `x, y, β` with `x, y > 0`, `xy < 1` and `β < 0`, or `0 < β < min(1/x, y)` when
/// positive β is allowed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticParams {
    pub x: f64,
    pub y: f64,
    pub beta: f64,
    pub allow_positive_beta: bool,
}

impl AsymptoticParams {
    pub fn new(x: f64, y: f64, beta: f64) -> Result<Self, LimitShapeError> {
        Self::build(x, y, beta, false)
    }

    /// Same pipeline for `0 < β < min(1/x, y)`; results there are conjectural.
    pub fn with_positive_beta(x: f64, y: f64, beta: f64) -> Result<Self, LimitShapeError> {
        Self::build(x, y, beta, true)
    }

    fn build(x: f64, y: f64, beta: f64, allow_positive_beta: bool) -> Result<Self, LimitShapeError> {
        let finite = x.is_finite() && y.is_finite() && beta.is_finite();
        if !finite || x <= 0.0 || y <= 0.0 || x * y >= 1.0 {
            return Err(LimitShapeError::InvalidParams(format!("need x, y > 0 and xy < 1; got x={x}, y={y}")));
        }
        let beta_ok = if allow_positive_beta { beta != 0.0 && beta < (1.0 / x).min(y) } else { beta < 0.0 };
        if !beta_ok {
            let need = if allow_positive_beta { "β ≠ 0, β < min(1/x, y)" } else { "β < 0" };
            return Err(LimitShapeError::InvalidParams(format!("need {need}; got β={beta}")));
        }
        Ok(Self { x, y, beta, allow_positive_beta })
    }

    pub fn is_conjectural(&self) -> bool {
        self.beta > 0.0
    }
}
