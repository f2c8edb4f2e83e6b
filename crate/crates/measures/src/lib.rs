//! Tilted biorthogonal ensembles and their Grothendieck specialization: the difference operators
//! `D`, `D†`, configuration weights, Gram normalization, the polynomials `G_λ`, `Ḡ_λ` and the
//! resulting measure on partitions.

mod ensemble;
mod error;
mod grothendieck;
mod operators;

pub use ensemble::{tilted_weight, TiltedEnsemble};
pub use error::MeasureError;
pub use grothendieck::{
    confluent_bialternant, grothendieck_g, grothendieck_gbar, grothendieck_weight, schur_polynomial, schur_weight,
    CauchyCheck, GrothendieckModel,
};
pub use operators::{apply_d, apply_d_chain, apply_d_dagger, apply_d_dagger_chain, WeightFn};

pub type ExactModel = GrothendieckModel<groth_core::Rational>;
pub type FloatModel = GrothendieckModel<f64>;
pub type ExactEnsemble = TiltedEnsemble<groth_core::Rational>;
