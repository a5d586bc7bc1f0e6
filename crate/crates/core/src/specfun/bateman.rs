use std::f64::consts::PI;

use super::{EvalConfig, MethodTag, SpecialValue};
use crate::error::{domain, Error, Result};
use crate::quad::{gauss_legendre, gauss_legendre_panel, wynn_epsilon};

const TAIL_PANELS: usize = 40;
const PANEL_NODES: usize = 24;

/// Bateman's function `k_E(x) = (2/pi) int_0^{pi/2} cos(x tan(t) - E t) dt`.
///
/// With `u = tan t` this is `(2/pi) int_0^inf cos(xu - E atan u)/(1+u^2) du`.
/// The integral is split into a head of short Gauss-Legendre panels and a
/// tail of half-period panels `[j pi/x, (j+1) pi/x]` whose alternating
/// partial sums are extrapolated with Wynn's epsilon algorithm.
/// Negative `x` uses `k_E(-x) = k_{-E}(x)`.
pub fn bateman_k(e: f64, x: f64, cfg: &EvalConfig) -> Result<SpecialValue> {
    cfg.validate()?;
    if x == 0.0 {
        let v = if e == 0.0 { 1.0 } else { 2.0 * (e * PI / 2.0).sin() / (e * PI) };
        return Ok(SpecialValue::new(v, f64::EPSILON * v.abs(), MethodTag::ClosedForm));
    }
    if x < 0.0 {
        return bateman_k(-e, -x, cfg);
    }
    let f = |u: f64| (x * u - e * u.atan()).cos() / (1.0 + u * u);
    oscillatory(&f, e, x, cfg, "Bateman k")
}

/// `k_E'(x) = -(2/pi) int_0^inf u sin(xu - E atan u)/(1+u^2) du` for `x != 0`.
///
/// At `x = 0` the derivative has a logarithmic singularity unless
/// `sin(E pi/2) = 0`; the origin is rejected.
pub fn bateman_k_deriv(e: f64, x: f64, cfg: &EvalConfig) -> Result<SpecialValue> {
    cfg.validate()?;
    if x == 0.0 {
        return domain("k_E'(x) is singular at x = 0");
    }
    if x < 0.0 {
        let v = bateman_k_deriv(-e, -x, cfg)?;
        return Ok(SpecialValue { value: -v.value, ..v });
    }
    let f = |u: f64| -u * (x * u - e * u.atan()).sin() / (1.0 + u * u);
    oscillatory(&f, e, x, cfg, "Bateman k'")
}

fn oscillatory<F: Fn(f64) -> f64>(f: &F, e: f64, x: f64, cfg: &EvalConfig, what: &str) -> Result<SpecialValue> {
    let half = PI / x;
    let head_end = half * (20f64.max(4.0 * e.abs()) / half).ceil();
    let rule = gauss_legendre(PANEL_NODES);
    let check = gauss_legendre(PANEL_NODES + 8);
    let pieces = (head_end / half.min(0.5)).round().max(1.0) as usize;
    let (mut head, mut head_check) = (0.0, 0.0);
    for j in 0..pieces {
        let a = j as f64 * head_end / pieces as f64;
        let b = (j + 1) as f64 * head_end / pieces as f64;
        head += gauss_legendre_panel(f, a, b, &rule);
        head_check += gauss_legendre_panel(f, a, b, &check);
    }
    let head_err = (head - head_check).abs() + pieces as f64 * f64::EPSILON;
    let mut sums = Vec::with_capacity(TAIL_PANELS + 1);
    let mut acc = head;
    sums.push(acc);
    for j in 0..TAIL_PANELS {
        let a = head_end + j as f64 * half;
        acc += gauss_legendre_panel(f, a, a + half, &rule);
        sums.push(acc);
    }
    let ext = wynn_epsilon(&sums);
    let value = 2.0 / PI * ext.value;
    let err = 2.0 / PI * (ext.err + head_err) + 8.0 * f64::EPSILON * value.abs();
    let allowed = 1e3 * cfg.quad_abs_tol.max(cfg.target_rel_tol * value.abs());
    if !(err <= allowed) {
        return Err(Error::Evaluation { what: format!("{what}({e}, {x})"), partial: value, bound: err });
    }
    Ok(SpecialValue::new(value, err, MethodTag::IntegralRep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{gamma, tricomi_u};
    use approx::assert_relative_eq;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    // (E, x, k_E(x), k_E'(x)) from the confluent form e^{-x} U(-E/2, 0, 2x)/Gamma(E/2+1), 20 digits
    const REF: [(f64, f64, f64, f64); 7] = [
        (1.0, 1.0, 0.651_218_525_908_553_4, -0.383_186_043_874_564_86),
        (-1.0, 0.5, 0.233_009_855_029_797_65, -0.355_493_603_667_409_95),
        (3.0, 2.0, 0.657_216_771_751_686_7, -0.083_529_954_343_973_78),
        (-2.5, 1.5, -0.006_305_025_511_311_919, 0.009_765_295_303_206_805),
        (5.0, 0.1, 0.134_132_823_831_910_2, -0.671_414_123_471_219_4),
        (-7.0, 3.0, -1.852_827_995_821_466e-5, 3.284_591_682_514_296e-5),
        (0.5, 10.0, 1.068_860_959_705_310_8e-4, -1.043_074_029_673_607_1e-4),
    ];

    #[test]
    fn reference_values() {
        for &(e, x, k, dk) in &REF {
            let v = bateman_k(e, x, &cfg()).unwrap();
            assert!((v.value - k).abs() < 1e-12, "k_{e}({x}) = {} vs {k}", v.value);
            let d = bateman_k_deriv(e, x, &cfg()).unwrap();
            assert!((d.value - dk).abs() < 1e-11, "k'_{e}({x}) = {} vs {dk}", d.value);
        }
    }

    #[test]
    fn confluent_form() {
        for &(e, x) in &[(1.0, 0.7), (-3.0, 1.3), (2.2, 2.5)] {
            let u = tricomi_u(-e / 2.0, 0.0, 2.0 * x, &cfg()).unwrap().value;
            let want = (-x).exp() * u / gamma(e / 2.0 + 1.0);
            assert_relative_eq!(bateman_k(e, x, &cfg()).unwrap().value, want, max_relative = 1e-11);
        }
    }

    #[test]
    fn origin_and_reflection() {
        assert_relative_eq!(bateman_k(1.0, 0.0, &cfg()).unwrap().value, 2.0 / PI, max_relative = 1e-15);
        assert!(bateman_k(2.0, 0.0, &cfg()).unwrap().value.abs() < 1e-16);
        let a = bateman_k(1.5, -0.8, &cfg()).unwrap().value;
        let b = bateman_k(-1.5, 0.8, &cfg()).unwrap().value;
        assert_eq!(a, b);
        assert!(bateman_k_deriv(1.0, 0.0, &cfg()).is_err());
    }

    #[test]
    fn theta_form_brute_force() {
        // Composite Simpson on the original finite-range form, 10^6 panels.
        // The integrand oscillates without bound at t = pi/2, so Simpson only
        // settles to about 2e-5 there (its error wanders between 1e-5 and
        // 2e-5 for 2.5e5..4e6 panels).
        let (e, x) = (1.0, 1.0);
        let n = 1_000_000;
        let h = PI / 2.0 / n as f64;
        let g = |t: f64| {
            if t >= PI / 2.0 - 1e-300 {
                0.0
            } else {
                (x * t.tan() - e * t).cos()
            }
        };
        let mut s = g(0.0) + g(PI / 2.0);
        for i in 1..n {
            s += g(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        let simpson = 2.0 / PI * s * h / 3.0;
        let v = bateman_k(e, x, &cfg()).unwrap().value;
        assert!((v - simpson).abs() < 5e-5, "{v} vs {simpson}");
    }

    #[test]
    fn satisfies_its_equation() {
        // x k'' = (x - E) k
        let (e, x, h) = (1.0, 1.2, 1e-3);
        let k = |t: f64| bateman_k(e, t, &cfg()).unwrap().value;
        let d2 = (-k(x + 2.0 * h) + 16.0 * k(x + h) - 30.0 * k(x) + 16.0 * k(x - h) - k(x - 2.0 * h)) / (12.0 * h * h);
        assert!((x * d2 - (x - e) * k(x)).abs() < 1e-7);
    }
}
