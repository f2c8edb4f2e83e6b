use groth_core::CoreError;
use groth_measures::MeasureError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Schur2dError {
    #[error("Gram matrix is singular")]
    SingularGram,
    #[error("no circular contours satisfy the ordering and pole conditions: {0}")]
    ContourInfeasible(String),
    #[error("closed form available for i in 0..=3 only, got {0}")]
    UnsupportedIndex(u64),
    #[error("closed forms need N = 2 with homogeneous parameters")]
    NotHomogeneousPair,
    #[error("invalid correlation spec: {0}")]
    InvalidSpec(String),
    #[error("level {level} out of range 1..={n}")]
    LevelOutOfRange { level: usize, n: usize },
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Core(#[from] CoreError),
}
