use std::f64::consts::FRAC_PI_2;

use crate::error::{param, Result};
use crate::quad::{adaptive_quad_with, QuadOptions};

/// `int_0^B sqrt(E x^N - x^{2N+2}) dx` with turning point `B = E^{1/(N+2)}`.
///
/// The substitution `x = B sin^{2/(N+2)}(theta)` maps `[0, B]` onto
/// `[0, pi/2]` and makes the integrand analytic at both ends (it becomes
/// proportional to `cos^2(theta)`), so plain adaptive quadrature applies.
pub fn wkb_action(exponent: i64, energy: f64) -> Result<f64> {
    if exponent < -1 {
        return param(format!("exponent N={exponent} must be >= -1"));
    }
    if !(energy > 0.0) {
        return param(format!("WKB action needs E > 0, got {energy}"));
    }
    let k = (exponent + 2) as f64;
    let b = energy.powf(1.0 / k);
    let nf = exponent as f64;
    let f = |th: f64| {
        let s = th.sin();
        if s <= 0.0 {
            return 0.0;
        }
        let x = b * s.powf(2.0 / k);
        let dx = b * (2.0 / k) * s.powf(2.0 / k - 1.0) * th.cos();
        let g = x.powf(nf) * (energy - x.powf(k));
        g.max(0.0).sqrt() * dx
    };
    let opts = QuadOptions { abs_tol: 1e-13 * energy.max(1.0), rel_tol: 1e-13, max_intervals: 2000 };
    Ok(adaptive_quad_with(f, 0.0, FRAC_PI_2, &opts)?.value)
}
