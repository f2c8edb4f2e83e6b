//! Exact sampling of the Schur process behind Grothendieck measures, by row insertion of a
//! geometric matrix followed by dual insertion of a Bernoulli matrix.

mod sample;
mod tableau;

use thiserror::Error;

pub use sample::{
    grothendieck_from_process, sample_grothendieck, sample_many, sample_many_processes, sample_schur_process, RngSpec, SamplerParams,
};
pub use tableau::{dual_rsk_insert_word, rsk_insert_word, Tableau};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SamplerError {
    #[error("invalid regime: {0}")]
    InvalidRegime(String),
    #[error("the sampler needs homogeneous parameters")]
    NotHomogeneous,
}
