use groth_schur2d::Schur2dError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PmapError {
    #[error("matrix size {n} exceeds the limit {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("expected size {expected}, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("expected {expected} values, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("points must be pairwise distinct")]
    RepeatedPoint,
    #[error(transparent)]
    Schur2d(#[from] Schur2dError),
}
