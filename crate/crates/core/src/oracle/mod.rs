//! Independent numerical checks: a shooting eigensolver and quadrature of
//! the even-N weight functions.

mod shooting;
mod weights;

pub use crate::quad::{adaptive_quad, QuadResult};
pub use shooting::{shoot_eigenvalue, spectrum_scan, ShootResult, ShootingConfig};
pub use weights::{
    moment_numeric_even, norm_gamma_form, norm_ratio, orthogonality_numeric_even, MomentCheck,
};
