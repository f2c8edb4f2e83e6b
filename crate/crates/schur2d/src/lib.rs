//! The two-dimensional process over a tilted biorthogonal ensemble: configurations and weights,
//! the Eynard-Mehta kernel, the Schur-process contour kernel, and marginals and correlations of
//! the one-dimensional ensemble recovered from the kernel.

mod closed_form;
mod config;
mod contour;
mod error;
mod kernel;
mod marginal;

pub use closed_form::{one_point_closed_form, two_point_closed_form};
pub use config::{enumerate_configs_2d, transfer_determinant, weight_2d, Config2D};
pub use contour::{contour_kernel, ContourKernel, ContourRadii};
pub use error::Schur2dError;
pub use kernel::{em_kernel, EmKernel, KernelQuery};
pub use marginal::{correlation_function, marginal_probability, naive_kernel_measure, CorrelationSpec};
