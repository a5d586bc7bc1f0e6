//! Generating functions of the monic families, expanded in `t` at fixed `z`.
//!
//! Even families: `sum_n (-1)^n p_n(z) t^n / n!`. Odd families:
//! `sum_n P_n(z) t^n / n!`. All closed forms are written in terms of
//! `r = 1 - lambda t` with `lambda = 2(N+2)`.

use serde::Serialize;

use super::jet::Jet;
use crate::error::{domain, param, Result};
use crate::poly::{evaluate_f64, Family, FamilySpec};
use crate::specfun::{bateman_k, bateman_k_deriv, kummer_1f1, tricomi_u, EvalConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GeneratingForm {
    /// `r^{-1 +- 1/(N+2)} exp(-z t / r)` for `p` (upper sign) and `q`.
    Elementary,
    /// `r^{-1-s} M(1+s, 1+2s, u) / M(1+s, 1+2s, u0)` for `P` and
    /// `r^{-1+s} M(1-s, 1-2s, u) / M(1-s, 1-2s, u0)` for `Q`, with
    /// `s = 1/(2(N+2))`, `u = z/(lambda r)`.
    KummerRatio,
    /// `N = -1` only: `(1-2t)^{-3/2} e^w k_{-3}(w) / (e^{w0} k_{-3}(w0))`
    /// for `P` and `(1-2t)^{-1/2} e^w k_{-1}(w) / (e^{w0} k_{-1}(w0))` for
    /// `Q`, with `w = z/(4(1-2t))`.
    BatemanRatio,
    /// `r^{-1-s} W(u)` for `P`, `r^{-1+s} W(u)` for `Q`, where `W` solves
    /// Kummer's equation with the same parameters as `KummerRatio` and
    /// `W(u0) = W'(u0) = 1`.
    KummerInitialValue,
}

impl GeneratingForm {
    pub const ALL: [GeneratingForm; 4] = [
        GeneratingForm::Elementary,
        GeneratingForm::KummerRatio,
        GeneratingForm::BatemanRatio,
        GeneratingForm::KummerInitialValue,
    ];

    pub fn applies_to(self, spec: FamilySpec) -> bool {
        match self {
            GeneratingForm::Elementary => spec.family().is_even(),
            GeneratingForm::BatemanRatio => spec.exponent() == -1,
            GeneratingForm::KummerRatio | GeneratingForm::KummerInitialValue => !spec.family().is_even(),
        }
    }
}

/// The Taylor coefficients the generating functions should reproduce.
pub fn target_coefficients(spec: FamilySpec, z: f64, count: usize) -> Vec<f64> {
    let mut fact = 1.0;
    (0..count)
        .map(|n| {
            if n > 0 {
                fact *= n as f64;
            }
            let sign = if spec.family().is_even() && n % 2 == 1 { -1.0 } else { 1.0 };
            sign * evaluate_f64(spec, n, z) / fact
        })
        .collect()
}

/// First `count` Taylor coefficients in `t` of the chosen closed form.
pub fn generating_coefficients(
    form: GeneratingForm,
    spec: FamilySpec,
    z: f64,
    count: usize,
    cfg: &EvalConfig,
) -> Result<Vec<f64>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    if !form.applies_to(spec) {
        return param(format!("{form:?} does not apply to {}", spec.family()));
    }
    let lambda = spec.lambda() as f64;
    let big_n = spec.exponent() as f64;
    let t = Jet::variable(0.0, count);
    let r = &Jet::constant(1.0, count) - &t.scale(lambda);
    let r_inv = r.recip();
    let jet = match form {
        GeneratingForm::Elementary => {
            let sign = if spec.family() == Family::EvenP { 1.0 } else { -1.0 };
            let prefactor = r.powf(-1.0 + sign / (big_n + 2.0));
            let expo = (&t * &r_inv).scale(-z).exp();
            &prefactor * &expo
        }
        GeneratingForm::KummerRatio => {
            let (a, b, al) = kummer_params(spec);
            let u = r_inv.scale(z / lambda);
            let u0 = z / lambda;
            let m0 = kummer_1f1(a, b, u0, cfg)?.value;
            let mut derivs = Vec::with_capacity(count);
            let mut poch = 1.0;
            for k in 0..count {
                let kf = k as f64;
                if k > 0 {
                    poch *= (a + kf - 1.0) / (b + kf - 1.0);
                }
                derivs.push(poch * kummer_1f1(a + kf, b + kf, u0, cfg)?.value / m0);
            }
            &r.powf(al) * &u.compose(&derivs)
        }
        GeneratingForm::BatemanRatio => {
            let (e, al) = if spec.family() == Family::OddP { (-3.0, -1.5) } else { (-1.0, -0.5) };
            let w = r_inv.scale(z / 4.0);
            let w0 = z / 4.0;
            let mut k = vec![bateman_k(e, w0, cfg)?.value];
            if count > 1 {
                k.push(bateman_k_deriv(e, w0, cfg)?.value);
            }
            // x k'' = (x - E) k, differentiated j times
            for j in 0..count.saturating_sub(2) {
                let jf = j as f64;
                let lower = if j > 0 { k[j - 1] } else { 0.0 };
                k.push(((w0 - e) * k[j] + jf * lower - jf * k[j + 1]) / w0);
            }
            let k0 = k[0];
            let kn: Vec<f64> = k.iter().map(|v| v / k0).collect();
            let shift = &w - &Jet::constant(w0, count);
            &(&r.powf(al) * &shift.exp()) * &w.compose(&kn)
        }
        GeneratingForm::KummerInitialValue => {
            let (a, b, al) = kummer_params(spec);
            let u0 = z / lambda;
            let derivs = kummer_jet(a, b, u0, 1.0, 1.0, count);
            &r.powf(al) * &r_inv.scale(z / lambda).compose(&derivs)
        }
    };
    Ok(jet.coeffs().to_vec())
}

/// Value of `KummerInitialValue` at a point, built from `M` and `U`.
/// Needs `z > 0` and `|t| < 1/lambda`.
pub fn kummer_initial_value_at(spec: FamilySpec, z: f64, t: f64, cfg: &EvalConfig) -> Result<f64> {
    if spec.family().is_even() {
        return param("the Kummer forms apply to the odd families only");
    }
    let lambda = spec.lambda() as f64;
    let r = 1.0 - lambda * t;
    if !(z > 0.0) || !(r > 0.0) {
        return domain(format!("need z > 0 and t < 1/{lambda}, got z={z}, t={t}"));
    }
    let (a, b, al) = kummer_params(spec);
    let (u0, u) = (z / lambda, z / (lambda * r));
    let (y1, dy1) = regular_solution(a, b, u0, cfg)?;
    let y2 = tricomi_u(a, b, u0, cfg)?.value;
    let dy2 = -a * tricomi_u(a + 1.0, b + 1.0, u0, cfg)?.value;
    let det = y1 * dy2 - y2 * dy1;
    let alpha = (dy2 - y2) / det;
    let beta = (y1 - dy1) / det;
    let w = alpha * regular_solution(a, b, u, cfg)?.0 + beta * tricomi_u(a, b, u, cfg)?.value;
    Ok(r.powf(al) * w)
}

fn kummer_params(spec: FamilySpec) -> (f64, f64, f64) {
    let s = 1.0 / (2.0 * (spec.exponent() + 2) as f64);
    if spec.family() == Family::OddP {
        (1.0 + s, 1.0 + 2.0 * s, -1.0 - s)
    } else {
        (1.0 - s, 1.0 - 2.0 * s, -1.0 + s)
    }
}

/// A solution of `u y'' + (b - u) y' - a y = 0` that is regular at the
/// origin and its derivative: `M(a, b, u)`, or `u^{1-b} M(a-b+1, 2-b, u)`
/// when `b` is a non-positive integer.
fn regular_solution(a: f64, b: f64, u: f64, cfg: &EvalConfig) -> Result<(f64, f64)> {
    if b <= 0.0 && b.fract() == 0.0 {
        let (a2, b2) = (a - b + 1.0, 2.0 - b);
        let m = kummer_1f1(a2, b2, u, cfg)?.value;
        let dm = a2 / b2 * kummer_1f1(a2 + 1.0, b2 + 1.0, u, cfg)?.value;
        let pw = u.powf(1.0 - b);
        Ok((pw * m, (1.0 - b) * pw / u * m + pw * dm))
    } else {
        let m = kummer_1f1(a, b, u, cfg)?.value;
        Ok((m, a / b * kummer_1f1(a + 1.0, b + 1.0, u, cfg)?.value))
    }
}

/// Derivatives `y^{(k)}(u0)` of the Kummer solution with `y(u0) = y0`,
/// `y'(u0) = y1`, from `u y^{(k+2)} = (u - b - k) y^{(k+1)} + (a + k) y^{(k)}`.
fn kummer_jet(a: f64, b: f64, u0: f64, y0: f64, y1: f64, count: usize) -> Vec<f64> {
    let mut d = vec![y0, y1];
    for k in 0..count.saturating_sub(2) {
        let kf = k as f64;
        d.push(((u0 - b - kf) * d[k + 1] + (a + kf) * d[k]) / u0);
    }
    d.truncate(count);
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::polynomial;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn max_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).abs() / y.abs().max(1.0)).fold(0.0, f64::max)
    }

    #[test]
    fn targets_from_exact_polynomials() {
        let spec = FamilySpec::new(Family::OddP, 1).unwrap();
        let t = target_coefficients(spec, 1.0, 3);
        let p2 = polynomial(spec, 2).eval_f64(1.0);
        assert_eq!(t[0], 1.0);
        assert!((t[2] - p2 / 2.0).abs() < 1e-12);
    }

    #[test]
    fn elementary_forms_match() {
        for n in [0, 2, 4] {
            for fam in [Family::EvenP, Family::EvenQ] {
                let spec = FamilySpec::new(fam, n).unwrap();
                for z in [1.0, -0.7, 3.5] {
                    let g = generating_coefficients(GeneratingForm::Elementary, spec, z, 6, &cfg()).unwrap();
                    let want = target_coefficients(spec, z, 6);
                    assert!(max_diff(&g, &want) < 1e-10, "{fam} N={n} z={z}: {g:?} vs {want:?}");
                }
            }
        }
    }

    #[test]
    fn initial_value_form_matches() {
        for n in [-1, 1, 3] {
            for fam in [Family::OddP, Family::OddQ] {
                let spec = FamilySpec::new(fam, n).unwrap();
                let g = generating_coefficients(GeneratingForm::KummerInitialValue, spec, 1.0, 6, &cfg()).unwrap();
                let want = target_coefficients(spec, 1.0, 6);
                assert!(max_diff(&g, &want) < 1e-10, "{fam} N={n}: {g:?} vs {want:?}");
            }
        }
    }

    #[test]
    fn initial_value_closed_form_agrees_with_jet() {
        // Partial Taylor sum against the M/U closed form at small t.
        let spec = FamilySpec::new(Family::OddP, 1).unwrap();
        let coeffs = generating_coefficients(GeneratingForm::KummerInitialValue, spec, 1.0, 25, &cfg()).unwrap();
        for t in [0.01f64, -0.02, 0.03] {
            let sum: f64 = coeffs.iter().enumerate().map(|(k, c)| c * t.powi(k as i32)).sum();
            let closed = kummer_initial_value_at(spec, 1.0, t, &cfg()).unwrap();
            assert!((sum - closed).abs() < 1e-9 * closed.abs(), "t={t}: {sum} vs {closed}");
        }
    }

    #[test]
    fn ratio_forms_fix_only_the_constant_term() {
        let spec = FamilySpec::new(Family::OddP, 1).unwrap();
        let g = generating_coefficients(GeneratingForm::KummerRatio, spec, 1.0, 6, &cfg()).unwrap();
        let want = target_coefficients(spec, 1.0, 6);
        assert!((g[0] - 1.0).abs() < 1e-14);
        assert!((g[1] - want[1]).abs() > 1e-3);
    }

    #[test]
    fn applicability() {
        let even = FamilySpec::new(Family::EvenP, 2).unwrap();
        let odd = FamilySpec::new(Family::OddQ, 3).unwrap();
        assert!(generating_coefficients(GeneratingForm::KummerRatio, even, 1.0, 3, &cfg()).is_err());
        assert!(generating_coefficients(GeneratingForm::Elementary, odd, 1.0, 3, &cfg()).is_err());
        assert!(generating_coefficients(GeneratingForm::BatemanRatio, odd, 1.0, 3, &cfg()).is_err());
        assert!(kummer_initial_value_at(odd, -1.0, 0.0, &cfg()).is_err());
    }
}
