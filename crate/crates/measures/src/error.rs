use groth_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MeasureError {
    #[error("operator index r = {r} outside 1..{n}")]
    IndexOutOfRange { r: usize, n: usize },
    #[error("ensemble needs N phi, N psi and N-1 betas (got {phi}, {psi}, {betas})")]
    Shape { phi: usize, psi: usize, betas: usize },
    #[error("Gram sum diverges: |x_{i} y_{j}| >= 1")]
    DivergentSum { i: usize, j: usize },
    #[error("a y parameter is zero")]
    ZeroParameter,
    #[error("1 - x_i beta_r vanishes for (i, r) = ({i}, {r})")]
    DegenerateNormalization { i: usize, r: usize },
    #[error(transparent)]
    Core(#[from] CoreError),
}
