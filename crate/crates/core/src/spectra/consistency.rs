use serde::Serialize;

use super::eigenfunctions::evaluate_raw;
use super::{EigenSpec, Route};
use crate::error::{param, Result};

/// Proportionality of two routes over a set of sample points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Consistency {
    /// `(max - min) / |mean|` of the pointwise ratio.
    pub spread: f64,
    /// Mean ratio `route_a / route_b`.
    pub ratio: f64,
    /// Points skipped because one of the routes (nearly) vanishes there.
    pub skipped: Vec<f64>,
}

/// Ratio spread of `route_a / route_b` for one eigenfunction.
pub fn route_consistency(spec: &EigenSpec, route_a: Route, route_b: Route, xs: &[f64]) -> Result<Consistency> {
    for r in [route_a, route_b] {
        if !r.is_legal(spec.exponent()) {
            return param(format!("route {r:?} is not available for N={}", spec.exponent()));
        }
    }
    let mut pairs = Vec::with_capacity(xs.len());
    for &x in xs {
        pairs.push((x, evaluate_raw(spec, route_a, x)?, evaluate_raw(spec, route_b, x)?));
    }
    let peak_a = pairs.iter().fold(0.0f64, |m, p| m.max(p.1.abs()));
    let peak_b = pairs.iter().fold(0.0f64, |m, p| m.max(p.2.abs()));
    let mut skipped = Vec::new();
    let mut ratios = Vec::with_capacity(pairs.len());
    for (x, a, b) in pairs {
        if a.abs() <= 1e-6 * peak_a || b.abs() <= 1e-6 * peak_b {
            skipped.push(x);
        } else {
            ratios.push(a / b);
        }
    }
    if ratios.is_empty() {
        return param("every sample point was skipped");
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let (lo, hi) = ratios
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &r| (l.min(r), h.max(r)));
    Ok(Consistency { spread: (hi - lo) / mean.abs(), ratio: mean, skipped })
}

/// Tricomi route against the decomposition route (generalized Airy for
/// `N >= 1`, K-Bessel for `N = -1`) at points `xs > 0`.
pub fn decomposition_consistency(exponent: i64, n: i64, xs: &[f64]) -> Result<Consistency> {
    if exponent % 2 == 0 {
        return param(format!("decomposition needs odd N, got {exponent}"));
    }
    if xs.iter().any(|&x| !(x > 0.0)) {
        return param("sample points must be positive");
    }
    let spec = EigenSpec::new(exponent, n)?;
    let other = if exponent == -1 { Route::BesselK0Form } else { Route::AiryDecomposition };
    route_consistency(&spec, Route::TricomiForm, other, xs)
}
