use super::{bessel_k, gamma, EvalConfig, MethodTag, SpecialValue};
use crate::error::{domain, Result};

/// Constants of `A_N(x) = C sqrt(x) K_nu(c1 x^p)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AiryConstants {
    /// `(N+1) / (2(N+2))`
    pub nu: f64,
    /// `(N+2) / (N+1)`
    pub p: f64,
    /// `(N+1) / (N+2)`
    pub c1: f64,
    /// `C = [4(N+1)]^nu / (2 pi sqrt(N+2))`
    pub norm: f64,
}

impl AiryConstants {
    pub fn new(n: i64) -> Result<Self> {
        if n < 1 || n % 2 == 0 {
            return domain(format!("generalized Airy needs odd N >= 1, got {n}"));
        }
        let nf = n as f64;
        let nu = (nf + 1.0) / (2.0 * (nf + 2.0));
        Ok(Self {
            nu,
            p: (nf + 2.0) / (nf + 1.0),
            c1: (nf + 1.0) / (nf + 2.0),
            norm: (4.0 * (nf + 1.0)).powf(nu) / (2.0 * std::f64::consts::PI * (nf + 2.0).sqrt()),
        })
    }

    /// `A_N(0)` and `A_N'(0)`.
    pub fn origin(&self) -> (f64, f64) {
        let Self { nu, c1, norm, .. } = *self;
        (
            norm * gamma(nu) * 2f64.powf(nu - 1.0) * c1.powf(-nu),
            -norm * gamma(1.0 - nu) * 2f64.powf(-nu) * c1.powf(nu - 1.0),
        )
    }
}

/// Generalized Airy function `A_N` and its derivative, solving
/// `A'' = x^{2/(N+1)} A`, for odd `N >= 1` and `x >= 0`.
///
/// The derivative follows from `K_nu'(u) = -K_{nu-1}(u) - (nu/u) K_nu(u)`:
/// the second term cancels the derivative of the `sqrt(x)` prefactor exactly
/// (`nu p = 1/2`), leaving `A_N' = -C x^{p-1/2} K_{1-nu}(c1 x^p)`.
/// At `x = 0` both are given by their closed-form limits.
pub fn generalized_airy(n: i64, x: f64, cfg: &EvalConfig) -> Result<(SpecialValue, SpecialValue)> {
    let k = AiryConstants::new(n)?;
    if !(x >= 0.0) {
        return domain(format!("generalized Airy requires x >= 0, got {x}"));
    }
    if x == 0.0 {
        let (a, d) = k.origin();
        let e = 4.0 * f64::EPSILON;
        return Ok((
            SpecialValue::new(a, e * a, MethodTag::ClosedForm),
            SpecialValue::new(d, e * d, MethodTag::ClosedForm),
        ));
    }
    let u = k.c1 * x.powf(k.p);
    let kv = bessel_k(k.nu, u, cfg)?;
    let kd = bessel_k(1.0 - k.nu, u, cfg)?;
    let f = k.norm * x.sqrt();
    let g = -k.norm * x.powf(k.p - 0.5);
    Ok((
        SpecialValue::new(f * kv.value, f * kv.est_abs_error + 4.0 * f64::EPSILON * (f * kv.value), MethodTag::IntegralRep),
        SpecialValue::new(g * kd.value, (g * kd.est_abs_error).abs() + 4.0 * f64::EPSILON * (g * kd.value).abs(), MethodTag::IntegralRep),
    ))
}

/// Airy function `Ai(x)` for `x >= 0`.
pub fn airy_ai(x: f64) -> Result<SpecialValue> {
    Ok(generalized_airy(1, x, &EvalConfig::default())?.0)
}

/// `Ai'(x)` for `x >= 0`.
pub fn airy_ai_prime(x: f64) -> Result<SpecialValue> {
    Ok(generalized_airy(1, x, &EvalConfig::default())?.1)
}
