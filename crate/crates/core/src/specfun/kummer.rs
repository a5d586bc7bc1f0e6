use super::dd::Dd;
use super::{EvalConfig, MethodTag, SpecialValue};
use crate::error::{domain, Error, Result};

/// Kummer's function `M(a, b, x) = sum (a)_k / (b)_k x^k / k!`.
///
/// The Taylor series is summed in double-double arithmetic, so the direct
/// route stays accurate through the cancellation at moderately negative `x`.
/// Below `cfg.kummer_threshold` the transform `M(a,b,x) = e^x M(b-a,b,-x)`
/// is used instead.
pub fn kummer_1f1(a: f64, b: f64, x: f64, cfg: &EvalConfig) -> Result<SpecialValue> {
    cfg.validate()?;
    if b <= 0.0 && b == b.round() {
        return domain(format!("1F1 undefined for b = {b}"));
    }
    if x < cfg.kummer_threshold {
        let inner = series(b - a, b, -x, cfg)?;
        let ex = x.exp();
        return Ok(SpecialValue::new(
            ex * inner.value,
            ex * inner.est_abs_error + f64::EPSILON * (ex * inner.value).abs(),
            MethodTag::KummerTransformedSeries,
        ));
    }
    series(a, b, x, cfg)
}

pub(crate) fn series(a: f64, b: f64, x: f64, cfg: &EvalConfig) -> Result<SpecialValue> {
    let (da, db, dx) = (Dd::new(a), Dd::new(b), Dd::new(x));
    let mut term = Dd::new(1.0);
    let mut sum = Dd::new(1.0);
    let mut abs_sum = 1.0f64;
    let stop = cfg.target_rel_tol * 1e-4;
    for k in 0..cfg.max_series_terms {
        let kk = Dd::new(k as f64);
        term = term * (da + kk) * dx / ((db + kk) * (kk + Dd::new(1.0)));
        sum = sum + term;
        let t = term.to_f64().abs();
        abs_sum += t;
        let shrinking = (k as f64 + 1.0) > x.abs() + a.abs();
        if t == 0.0 || (shrinking && t <= stop * sum.to_f64().abs()) {
            let v = sum.to_f64();
            let err = t + 1e-30 * (k as f64 + 1.0) * abs_sum + f64::EPSILON * v.abs();
            return Ok(SpecialValue::new(v, err, MethodTag::Series));
        }
    }
    Err(Error::Evaluation {
        what: format!("1F1({a}, {b}, {x}) series"),
        partial: sum.to_f64(),
        bound: term.to_f64().abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{polynomial, Family, FamilySpec};
    use crate::specfun::gamma;
    use approx::assert_relative_eq;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn zero_argument() {
        for (a, b) in [(0.3, 1.7), (-2.0, 0.5), (5.0, -1.5)] {
            assert_eq!(kummer_1f1(a, b, 0.0, &cfg()).unwrap().value, 1.0);
        }
    }

    #[test]
    fn exponential_through_transform() {
        let v = kummer_1f1(1.0, 1.0, -40.0, &cfg()).unwrap();
        assert_eq!(v.method, MethodTag::KummerTransformedSeries);
        assert_relative_eq!(v.value, (-40f64).exp(), max_relative = 1e-12);
        let v = kummer_1f1(1.0, 1.0, 12.5, &cfg()).unwrap();
        assert_relative_eq!(v.value, 12.5f64.exp(), max_relative = 1e-14);
    }

    #[test]
    fn laguerre_truncation() {
        // L_2^{(-1/2)}(t) = p_2(4t) / (2! 4^2) for the N = 0 family.
        let t = 1.5;
        let p2 = polynomial(FamilySpec::new(Family::EvenP, 0).unwrap(), 2);
        let lag = p2.eval_f64(4.0 * t) / 32.0;
        let c = 0.5;
        let via_laguerre = 2.0 * gamma(c) / gamma(c + 2.0) * lag;
        let v = kummer_1f1(-2.0, c, t, &cfg()).unwrap();
        assert_relative_eq!(v.value, via_laguerre, max_relative = 1e-14);
        assert_relative_eq!(v.value, -2.0, max_relative = 1e-14);
    }

    #[test]
    fn direct_and_transformed_agree_on_negative_axis() {
        let direct = EvalConfig { kummer_threshold: f64::NEG_INFINITY, ..cfg() };
        let transformed = EvalConfig { kummer_threshold: f64::INFINITY, ..cfg() };
        for &(a, b) in &[(0.5, 1.5), (1.0 / 6.0, 2.0 / 3.0), (-2.5, 0.25), (3.2, 1.1)] {
            let mut x = -30.0;
            while x <= -10.0 {
                let d = kummer_1f1(a, b, x, &direct).unwrap();
                let t = kummer_1f1(a, b, x, &transformed).unwrap();
                assert_eq!(t.method, MethodTag::KummerTransformedSeries);
                assert_relative_eq!(d.value, t.value, max_relative = 1e-9);
                x += 2.5;
            }
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(kummer_1f1(1.0, -2.0, 1.0, &cfg()), Err(Error::Domain(_))));
        let short = EvalConfig { max_series_terms: 3, ..cfg() };
        assert!(matches!(kummer_1f1(0.5, 1.5, 10.0, &short), Err(Error::Evaluation { .. })));
    }
}
