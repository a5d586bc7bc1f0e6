use super::{EvalConfig, MethodTag, SpecialValue};
use crate::error::{domain, Error, Result};
use crate::quad::trapezoid;

/// Modified Bessel function `K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt`.
///
/// The integrand is analytic and decays double-exponentially, so the
/// trapezoid rule on `[0, t_max]` converges geometrically; `t_max` is where
/// the integrand has fallen below `quad_abs_tol * 1e-6` of its peak. The
/// factor `e^{-x}` is taken out to avoid underflow.
pub fn bessel_k(nu: f64, x: f64, cfg: &EvalConfig) -> Result<SpecialValue> {
    cfg.validate()?;
    if !(x > 0.0) {
        return domain(format!("K_nu(x) requires x > 0, got {x}"));
    }
    let nu = nu.abs();
    // log of e^{-x(cosh t - 1)} cosh(nu t)
    let log_f = |t: f64| {
        let sh = (0.5 * t).sinh();
        -2.0 * x * sh * sh + (nu * t).cosh().ln()
    };
    let cutoff = (cfg.quad_abs_tol * 1e-6).ln();
    let mut peak = 0.0f64;
    let mut t_max = 0.0;
    loop {
        t_max += 0.5;
        let v = log_f(t_max);
        peak = peak.max(v);
        if v < peak + cutoff && v < log_f(t_max - 0.5) {
            break;
        }
        if t_max > 200.0 {
            return Err(Error::Evaluation { what: format!("K_{nu}({x}) truncation"), partial: f64::NAN, bound: f64::NAN });
        }
    }
    let tol = (cfg.target_rel_tol * 1e-3).max(1e-16);
    let r = trapezoid(|t| (log_f(t) - peak).exp(), 0.0, t_max, tol, 14)?;
    let scale = (peak - x).exp();
    let value = r.value * scale;
    Ok(SpecialValue::new(value, r.err * scale + 4.0 * f64::EPSILON * value, MethodTag::IntegralRep))
}
