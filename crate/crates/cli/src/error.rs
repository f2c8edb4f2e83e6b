use std::fmt;

use groth_limitshape::LimitShapeError;
use groth_measures::MeasureError;
use groth_pmap::PmapError;
use groth_sampler::SamplerError;
use groth_schur2d::Schur2dError;

/// Failure of a subcommand, carrying its exit code class.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit 2.
    Usage(String),
    /// Parameters outside the supported regime: exit 3.
    Regime(String),
    /// A computation did not meet its own check: exit 4.
    Numeric(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Regime(_) => 3,
            CliError::Numeric(_) | CliError::Io(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Regime(m) => write!(f, "regime error: {m}"),
            CliError::Numeric(m) => write!(f, "numeric failure: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Usage(format!("csv: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Numeric(format!("json: {e}"))
    }
}

impl From<groth_core::CoreError> for CliError {
    fn from(e: groth_core::CoreError) -> Self {
        use groth_core::CoreError::*;
        match e {
            Divergent { .. } => CliError::Regime(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<MeasureError> for CliError {
    fn from(e: MeasureError) -> Self {
        match e {
            MeasureError::Core(c) => c.into(),
            MeasureError::DivergentSum { .. } | MeasureError::DegenerateNormalization { .. } | MeasureError::ZeroParameter => {
                CliError::Regime(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<Schur2dError> for CliError {
    fn from(e: Schur2dError) -> Self {
        match e {
            Schur2dError::Measure(m) => m.into(),
            Schur2dError::Core(c) => c.into(),
            Schur2dError::SingularGram | Schur2dError::ContourInfeasible(_) => CliError::Numeric(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<PmapError> for CliError {
    fn from(e: PmapError) -> Self {
        match e {
            PmapError::Schur2d(s) => s.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<SamplerError> for CliError {
    fn from(e: SamplerError) -> Self {
        CliError::Regime(e.to_string())
    }
}

impl From<LimitShapeError> for CliError {
    fn from(e: LimitShapeError) -> Self {
        match e {
            LimitShapeError::InvalidParams(_) => CliError::Regime(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}
