use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("partition has {parts} nonzero parts but the row cap is {cap}")]
    TooManyParts { parts: usize, cap: usize },
    #[error("sequence is not decreasing: {0:?}")]
    NotDecreasing(Vec<u64>),
    #[error("expected {expected} {what}, got {got}")]
    WrongLength { what: &'static str, expected: usize, got: usize },
    #[error("parameters violate |x_i y_j| < 1 at (i, j) = ({i}, {j})")]
    Divergent { i: usize, j: usize },
    #[error("malformed profile csv: {0}")]
    Csv(String),
}
