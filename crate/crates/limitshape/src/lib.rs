//! Limit shapes of homogeneous Grothendieck random partitions: the critical point cubic, the
//! height surface of the Schur process integrated from its gradient, the frozen boundary, and
//! the cross-section giving the rotated shape `𝔚`.

mod boundary;
mod burgers;
mod cubic;
mod params;
mod row;
mod shape;
mod zones;

use thiserror::Error;

pub use boundary::{boundary_point, boundary_z_grid, cusp_cubic, cusp_point, double_root_residuals, frozen_boundary, BoundaryPoint, Cusp};
pub use burgers::burgers_residual;
pub use cubic::{cubic_coefficients, cubic_roots, discriminant, double_root, real_roots, relative_residual, solve_cubic};
pub use params::AsymptoticParams;
pub use row::{HeightRow, Piece};
pub use shape::{height_surface, shape_w, solve_l, uniform_taus, vkls_deviation, vkls_omega, LimitShape, ShapeGrid};
pub use zones::{classify_point, gradient_at, height_gradient, zone_of_real, LiquidPoint, Zone};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LimitShapeError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("all cubic coefficients vanish")]
    DegenerateAllZero,
    #[error("frozen boundary detection failed: {0}")]
    BoundaryDetectionFailed(String),
    #[error("no ξ with 𝔥(ξ, {tau}) = {level}")]
    NoRoot { tau: f64, level: f64 },
    #[error("boundary parameter z = {0} is at a pole")]
    PoleProximity(f64),
    #[error("stencil point ({xi}, {tau}) is not in the liquid region")]
    StencilLeavesLiquid { xi: f64, tau: f64 },
}
