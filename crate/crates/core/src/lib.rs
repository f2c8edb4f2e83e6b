//! Shared plumbing for Grothendieck random partitions: partitions and their particle encodings,
//! rotated profiles, model parameters, and a small exact/float linear algebra kit.
//!
//! Everything numeric is generic over [`Scalar`], implemented for `f32`, `f64`, their complex
//! versions and [`Rational`] (arbitrary precision).

mod error;
mod matrix;
mod params;
mod partition;
mod poly;
mod profile;
mod scalar;

pub use error::CoreError;
pub use matrix::Matrix;
pub use params::{ModelParams, Regime};
pub use partition::{
    enumerate_partitions, partition_to_particles, particles_to_partition, ParticleConfig, Partition, Partitions,
};
pub use poly::{binomial, elementary_symmetric, Poly};
pub use profile::{profile_of, Profile};
pub use scalar::{parse_rational, rational_to_f64, Scalar};

pub use num_complex::Complex64;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
pub type C64 = Complex64;

pub type ExactMatrix = Matrix<Rational>;
pub type FloatMatrix = Matrix<f64>;
pub type ComplexMatrix = Matrix<Complex64>;

pub type ExactParams = ModelParams<Rational>;
pub type FloatParams = ModelParams<f64>;
