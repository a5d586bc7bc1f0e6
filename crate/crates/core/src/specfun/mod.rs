//! Special functions in `f64`: confluent hypergeometric `1F1` and `U`,
//! modified Bessel `K_nu`, generalized Airy functions and Bateman's `k_E`.
//!
//! Every evaluation returns a [`SpecialValue`] carrying an error estimate and
//! the method used.

mod airy;
mod bateman;
mod bessel;
mod dd;
mod kummer;
mod tricomi;

use serde::Serialize;

pub use airy::{airy_ai, airy_ai_prime, generalized_airy, AiryConstants};
pub use bateman::{bateman_k, bateman_k_deriv};
pub use bessel::bessel_k;
pub use kummer::kummer_1f1;
pub use tricomi::{tricomi_u, tricomi_u_kummer};

use crate::error::{param, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalConfig {
    pub target_rel_tol: f64,
    pub max_series_terms: usize,
    pub quad_abs_tol: f64,
    /// Below this argument `1F1` switches to the Kummer-transformed series.
    pub kummer_threshold: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            target_rel_tol: 1e-12,
            max_series_terms: 500,
            quad_abs_tol: 1e-12,
            kummer_threshold: -30.0,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.target_rel_tol > 0.0 && self.quad_abs_tol > 0.0) {
            return param("tolerances must be positive");
        }
        if self.max_series_terms == 0 {
            return param("max_series_terms must be at least 1");
        }
        Ok(())
    }

    /// A configuration with all tolerances divided by `factor`.
    pub fn tightened(&self, factor: f64) -> Self {
        Self {
            target_rel_tol: self.target_rel_tol / factor,
            quad_abs_tol: self.quad_abs_tol / factor,
            ..*self
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MethodTag {
    Series,
    KummerTransformedSeries,
    IntegralRep,
    Recurrence,
    ClosedForm,
    Decomposition,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpecialValue {
    pub value: f64,
    pub est_abs_error: f64,
    pub method: MethodTag,
}

impl SpecialValue {
    pub(crate) fn new(value: f64, est_abs_error: f64, method: MethodTag) -> Self {
        Self { value, est_abs_error: est_abs_error.abs(), method }
    }
}

pub fn gamma(x: f64) -> f64 {
    statrs::function::gamma::gamma(x)
}

/// `1/Gamma(x)`, exactly zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.round() {
        0.0
    } else {
        1.0 / gamma(x)
    }
}
