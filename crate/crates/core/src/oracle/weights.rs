//! Numeric orthogonality, moments and norms of the polynomial families.

use std::f64::consts::PI;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{param, Result};
use crate::poly::{big_to_f64, evaluate_f64, moments_from_sfraction, norm_exact, Family, FamilySpec};
use crate::quad::{adaptive_quad_with, QuadOptions};
use crate::specfun::gamma;

/// Closed-form norm `int w f_n^2` with float Gamma: the even-N form with
/// `Gamma(n+1 -+ 1/(N+2))`, and the odd-N form
/// `(1/pi) sin(pi/lambda) lambda^{2n+1} Gamma(n+1-1/lambda) Gamma(n+1+1/lambda)`,
/// which gives `(2n-1)!! (2n+1)!!` at `N = -1`.
pub fn norm_gamma_form(spec: FamilySpec, n: usize) -> f64 {
    let lambda = spec.lambda() as f64;
    let nf = n as f64;
    let k = (spec.exponent() + 2) as f64;
    match spec.family() {
        Family::EvenP | Family::EvenQ => {
            let s = if spec.family() == Family::EvenP { -1.0 / k } else { 1.0 / k };
            lambda.powi(2 * n as i32) * gamma(nf + 1.0) * gamma(nf + 1.0 + s) / gamma(1.0 + s)
        }
        Family::OddP | Family::OddQ => {
            let s = 1.0 / lambda;
            (PI / lambda).sin() / PI
                * lambda.powi(2 * n as i32 + 1)
                * gamma(nf + 1.0 - s)
                * gamma(nf + 1.0 + s)
        }
    }
}

/// The three values compared by [`moment_numeric_even`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentCheck {
    /// Quadrature of `int_0^inf w(z) z^n dz`.
    pub numeric: f64,
    /// `lambda^n Gamma(n+1 -+ 1/(N+2)) / Gamma(1 -+ 1/(N+2))`.
    pub gamma_form: f64,
    /// Moment generated by the integer S-fraction.
    #[serde(serialize_with = "ser_big")]
    pub sfraction: BigInt,
    /// `s` with `sfraction = s^n gamma_form`; 1 at `n = 0`.
    pub rescale: f64,
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `int_0^inf w(z) z^n dz` by quadrature, next to its Gamma form and the
/// S-fraction moment.
pub fn moment_numeric_even(exponent: i64, family: Family, n: usize) -> Result<MomentCheck> {
    let spec = even_spec(exponent, family)?;
    if n > 8 {
        return param(format!("moment index {n} exceeds 8"));
    }
    let k = (exponent + 2) as f64;
    let lambda = spec.lambda() as f64;
    let s = if family == Family::EvenP { -1.0 / k } else { 1.0 / k };
    let gamma_form = lambda.powi(n as i32) * gamma(n as f64 + 1.0 + s) / gamma(1.0 + s);
    let numeric = weighted_integral(spec, 2 * n, |z| z.powi(n as i32), 1e-13 * gamma_form)?;
    let sfraction = moments_from_sfraction(spec, n + 1)?.values()[n].clone();
    let rescale = if n == 0 { 1.0 } else { (big_to_f64(&sfraction) / gamma_form).powf(1.0 / n as f64) };
    Ok(MomentCheck { numeric, gamma_form, sfraction, rescale })
}

/// `(int_0^inf w f_m f_n dz - delta_{mn} h_n) / sqrt(h_m h_n)` by
/// quadrature, with `h_n` the Gamma-form norm.
pub fn orthogonality_numeric_even(exponent: i64, family: Family, m: usize, n: usize) -> Result<f64> {
    let spec = even_spec(exponent, family)?;
    if m > 6 || n > 6 {
        return param(format!("indices ({m}, {n}) exceed 6"));
    }
    let (hm, hn) = (norm_gamma_form(spec, m), norm_gamma_form(spec, n));
    let scale = (hm * hn).sqrt();
    let v = weighted_integral(
        spec,
        m + n,
        |z| evaluate_f64(spec, m, z) * evaluate_f64(spec, n, z),
        1e-13 * scale,
    )?;
    let want = if m == n { hn } else { 0.0 };
    Ok((v - want) / scale)
}

/// Sanity check of [`norm_gamma_form`] against the integer chain.
pub fn norm_ratio(spec: FamilySpec, n: usize) -> f64 {
    norm_gamma_form(spec, n) / big_to_f64(&norm_exact(spec, n))
}

fn even_spec(exponent: i64, family: Family) -> Result<FamilySpec> {
    if !family.is_even() {
        return param(format!("{family} is not an even-N family"));
    }
    FamilySpec::new(family, exponent)
}

/// `int_0^Z w(z) g(z) dz` with `z = v^(N+2)`, which removes the
/// `z^(-+1/(N+2))` endpoint behaviour. The cut `Z = lambda (100 + 10 d)`
/// for a degree-`d` integrand leaves a tail below `e^{-60}` of the bulk.
fn weighted_integral<G: Fn(f64) -> f64>(spec: FamilySpec, degree: usize, g: G, abs_tol: f64) -> Result<f64> {
    let k = (spec.exponent() + 2) as f64;
    let lambda = spec.lambda() as f64;
    let (s, pow_v) = if spec.family() == Family::EvenP { (-1.0 / k, k - 2.0) } else { (1.0 / k, k) };
    let c = k * lambda.powf(-s - 1.0) / gamma(1.0 + s);
    let z_max = lambda * (100.0 + 10.0 * degree as f64);
    let v_max = z_max.powf(1.0 / k);
    let f = |v: f64| {
        let z = v.powf(k);
        c * v.powf(pow_v) * (-z / lambda).exp() * g(z)
    };
    let opts = QuadOptions { abs_tol, rel_tol: 1e-13, max_intervals: 4000 };
    Ok(adaptive_quad_with(f, 0.0, v_max, &opts)?.value)
}
