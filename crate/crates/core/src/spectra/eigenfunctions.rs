use serde::Serialize;

use super::{Branch, EigenSpec};
use crate::error::{domain, param, Result};
use crate::poly::{evaluate_f64, Family, FamilySpec};
use crate::specfun::{bateman_k, bessel_k, generalized_airy, tricomi_u, EvalConfig};

/// How an eigenfunction is evaluated.
///
/// * `LaguerreForm`: `e^{-x^{N+2}/(N+2)}` times `p_m(4x^{N+2})` or
///   `x q_m(4x^{N+2})` (even N).
/// * `TricomiForm`: `e^{-x^{N+2}/(N+2)} U(-n - 1/(2(N+2)), 1 - 1/(N+2), 2x^{N+2}/(N+2))`,
///   odd N, `x > 0` only.
/// * `AiryDecomposition`: `c t A_N((ct)^{N+1}) P_m(4t^{N+2}) + A_N'((ct)^{N+1}) Q_m(4t^{N+2})`
///   with `c = (N+1)^{-1/(N+2)}`, odd `N >= 1`.
/// * `BesselK0Form`: `t K_0(|t|) P_m(4t) - |t| K_1(|t|) Q_m(4t)`, N = -1.
/// * `Bateman`: `k_E(x)`, N = -1.
///
/// For the last three, index `n < 0` uses `m = -n-1, t = x` and `n >= 0`
/// uses `m = n, t = -x` (the reflection `y_n(x) = y_{-n-1}(-x)`). For
/// `N = -1` and `t < 0` the K-form is the real part of the continuation of
/// `t K_0(t)` below the cut on the positive imaginary axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Route {
    LaguerreForm,
    TricomiForm,
    AiryDecomposition,
    BesselK0Form,
    Bateman,
}

impl Route {
    pub fn canonical(exponent: i64) -> Route {
        match exponent {
            -1 => Route::Bateman,
            n if n % 2 == 0 => Route::LaguerreForm,
            _ => Route::AiryDecomposition,
        }
    }

    pub fn is_legal(self, exponent: i64) -> bool {
        let odd = exponent % 2 != 0;
        match self {
            Route::LaguerreForm => !odd,
            Route::TricomiForm => odd,
            Route::AiryDecomposition => odd && exponent >= 1,
            Route::BesselK0Form | Route::Bateman => exponent == -1,
        }
    }
}

const REFERENCE_POINTS: [f64; 5] = [1.0, 0.8, 1.25, 0.6, 1.5];

/// An eigenfunction bound to one evaluation route, rescaled so that it
/// agrees with the canonical route at a reference point near `x = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EigenfunctionHandle {
    pub spec: EigenSpec,
    pub route: Route,
    pub scale: f64,
    pub reference_point: f64,
}

impl EigenfunctionHandle {
    pub fn new(spec: EigenSpec, route: Route) -> Result<Self> {
        if !route.is_legal(spec.exponent()) {
            return param(format!("route {route:?} is not available for N={}", spec.exponent()));
        }
        let canonical = Route::canonical(spec.exponent());
        if route == canonical {
            return Ok(Self { spec, route, scale: 1.0, reference_point: 1.0 });
        }
        let mut samples = Vec::with_capacity(REFERENCE_POINTS.len());
        for &x0 in &REFERENCE_POINTS {
            samples.push((x0, evaluate_raw(&spec, route, x0)?));
        }
        let peak = samples.iter().fold(0.0f64, |m, s| m.max(s.1.abs()));
        let (x0, v) = *samples
            .iter()
            .find(|s| s.1.abs() > 1e-3 * peak)
            .ok_or_else(|| crate::Error::Parameter("route vanishes at every reference point".into()))?;
        let scale = evaluate_raw(&spec, canonical, x0)? / v;
        Ok(Self { spec, route, scale, reference_point: x0 })
    }

    pub fn canonical(spec: EigenSpec) -> Self {
        Self { spec, route: Route::canonical(spec.exponent()), scale: 1.0, reference_point: 1.0 }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        Ok(self.scale * evaluate_raw(&self.spec, self.route, x)?)
    }

    /// The route's own value, without the matching constant.
    pub fn raw(&self, x: f64) -> Result<f64> {
        evaluate_raw(&self.spec, self.route, x)
    }
}

fn family(f: Family, exponent: i64) -> FamilySpec {
    FamilySpec::new(f, exponent).expect("parity checked by the route")
}

fn reflected(spec: &EigenSpec, x: f64) -> (usize, f64) {
    if spec.index() < 0 {
        ((-spec.index() - 1) as usize, x)
    } else {
        (spec.index() as usize, -x)
    }
}

pub(crate) fn evaluate_raw(spec: &EigenSpec, route: Route, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return domain(format!("x must be finite, got {x}"));
    }
    let nn = spec.exponent();
    let k = (nn + 2) as f64;
    let cfg = EvalConfig::default();
    match route {
        Route::LaguerreForm => {
            let w = x.powi(nn as i32 + 2);
            let m = (spec.index() / 2) as usize;
            let env = (-w / k).exp();
            Ok(match spec.branch() {
                Branch::EvenParity => env * evaluate_f64(family(Family::EvenP, nn), m, 4.0 * w),
                _ => env * x * evaluate_f64(family(Family::EvenQ, nn), m, 4.0 * w),
            })
        }
        Route::TricomiForm => {
            if !(x > 0.0) {
                return domain(format!("Tricomi route needs x > 0, got {x}"));
            }
            let w = x.powi(nn as i32 + 2);
            let s = 1.0 / (2.0 * k);
            let u = tricomi_u(-(spec.index() as f64) - s, 1.0 - 2.0 * s, 2.0 * w / k, &cfg)?;
            Ok((-w / k).exp() * u.value)
        }
        Route::AiryDecomposition => {
            let (m, t) = reflected(spec, x);
            let c = (nn as f64 + 1.0).powf(-1.0 / k);
            let arg = (c * t).powi(nn as i32 + 1);
            let (a, da) = generalized_airy(nn, arg, &cfg)?;
            let z = 4.0 * t.powi(nn as i32 + 2);
            Ok(c * t * a.value * evaluate_f64(family(Family::OddP, nn), m, z)
                + da.value * evaluate_f64(family(Family::OddQ, nn), m, z))
        }
        Route::BesselK0Form => {
            let (m, t) = reflected(spec, x);
            let z = 4.0 * t;
            let q = evaluate_f64(family(Family::OddQ, -1), m, z);
            if t == 0.0 {
                return Ok(-q);
            }
            let p = evaluate_f64(family(Family::OddP, -1), m, z);
            let at = t.abs();
            let k0 = bessel_k(0.0, at, &cfg)?.value;
            let k1 = bessel_k(1.0, at, &cfg)?.value;
            Ok(t * k0 * p - at * k1 * q)
        }
        Route::Bateman => Ok(bateman_k(spec.energy() as f64, x, &cfg)?.value),
    }
}

/// Canonical eigenfunction value (route [`Route::canonical`], scale 1).
pub fn eigenfunction(spec: &EigenSpec, x: f64) -> Result<f64> {
    evaluate_raw(spec, Route::canonical(spec.exponent()), x)
}

/// Even-N eigenfunction in its Laguerre form.
pub fn eigenfunction_even(exponent: i64, n: i64, x: f64) -> Result<f64> {
    if exponent % 2 != 0 {
        return param(format!("eigenfunction_even needs even N, got {exponent}"));
    }
    eigenfunction(&EigenSpec::new(exponent, n)?, x)
}

/// Odd-N eigenfunction in the canonical normalization, evaluated where it
/// is best conditioned: the Tricomi route for `x > 0`, the same route with
/// `y_n(x) = y_{-n-1}(-x)` for `x < 0`, and the decomposition at `x = 0`.
/// The decomposition alone cancels badly on the side where the
/// eigenfunction is recessive.
pub fn eigenfunction_odd(exponent: i64, n: i64, x: f64) -> Result<f64> {
    if exponent % 2 == 0 {
        return param(format!("eigenfunction_odd needs odd N, got {exponent}"));
    }
    let spec = EigenSpec::new(exponent, n)?;
    if x > 0.0 {
        EigenfunctionHandle::new(spec, Route::TricomiForm)?.eval(x)
    } else if x < 0.0 {
        EigenfunctionHandle::new(EigenSpec::new(exponent, -n - 1)?, Route::TricomiForm)?.eval(-x)
    } else {
        eigenfunction(&spec, 0.0)
    }
}
