//! Deterministic quadrature: global adaptive Gauss-Kronrod, Gauss-Legendre
//! panels, a refining trapezoid rule for analytic decaying integrands, and
//! Wynn's epsilon algorithm for alternating tails.

use crate::error::{param, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub err: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self { abs_tol: 1e-12, rel_tol: 1e-12, max_intervals: 4000 }
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs = kron.abs();
    let mut fv = [(0.0, 0.0); 7];
    for (j, &x) in XGK[..7].iter().enumerate() {
        let (f1, f2) = (f(c - h * x), f(c + h * x));
        fv[j] = (f1, f2);
        kron += WGK[j] * (f1 + f2);
        abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kron;
    let mut asc = WGK[7] * (fc - mean).abs();
    for (j, &(f1, f2)) in fv.iter().enumerate() {
        asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let (value, abs, asc) = (kron * h, abs * h.abs(), asc * h.abs());
    let mut err = ((kron - gauss) * h).abs();
    if asc != 0.0 && err != 0.0 {
        err = asc * (200.0 * err / asc).powf(1.5).min(1.0);
    }
    if abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * abs);
    }
    Panel { a, b, value, err }
}

/// Integrate `f` over `[a, b]` to absolute tolerance `tol`.
///
/// `b` may be `+inf`; the half line is mapped onto `[0, 1)` by
/// `x = a + t/(1-t)`. Endpoint singularities must be integrable.
pub fn adaptive_quad<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    adaptive_quad_with(f, a, b, &QuadOptions { abs_tol: tol, rel_tol: 0.0, ..Default::default() })
}

pub fn adaptive_quad_with<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    opts: &QuadOptions,
) -> Result<QuadResult> {
    if !(opts.abs_tol > 0.0 || opts.rel_tol > 0.0) {
        return param("quadrature tolerance must be positive");
    }
    if a.is_nan() || b.is_nan() || a.is_infinite() {
        return param("quadrature limits must be finite (upper limit may be +inf)");
    }
    if b == f64::INFINITY {
        let g = |t: f64| {
            let s = 1.0 - t;
            f(a + t / s) / (s * s)
        };
        return global_adaptive(&g, 0.0, 1.0, opts);
    }
    global_adaptive(&f, a, b, opts)
}

fn global_adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, opts: &QuadOptions) -> Result<QuadResult> {
    let mut panels = vec![gk15(f, a, b)];
    loop {
        let value: f64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.err).sum();
        if !value.is_finite() {
            return Err(Error::Evaluation { what: "quadrature: non-finite integrand".into(), partial: value, bound: err });
        }
        if err <= opts.abs_tol.max(opts.rel_tol * value.abs()) {
            return Ok(QuadResult { value, err });
        }
        if panels.len() >= opts.max_intervals {
            return Err(Error::Evaluation { what: "quadrature: tolerance unreachable".into(), partial: value, bound: err });
        }
        let (worst, _) = panels
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, p)| if p.err > acc.1 { (i, p.err) } else { acc });
        let p = panels[worst];
        let m = 0.5 * (p.a + p.b);
        if m <= p.a || m >= p.b {
            return Err(Error::Evaluation { what: "quadrature: interval underflow".into(), partial: value, bound: err });
        }
        panels[worst] = gk15(f, p.a, m);
        panels.push(gk15(f, m, p.b));
    }
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

/// Apply a Gauss-Legendre rule (from [`gauss_legendre`]) on `[a, b]`.
pub fn gauss_legendre_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rule: &(Vec<f64>, Vec<f64>)) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    rule.0.iter().zip(&rule.1).map(|(x, w)| w * f(c + h * x)).sum::<f64>() * h
}

/// Trapezoid rule on `[lo, hi]`, halving the step until successive values
/// agree to `rel_tol`. Intended for integrands analytic in a strip that are
/// negligible at both ends, where the rule converges exponentially.
pub fn trapezoid<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, rel_tol: f64, max_levels: usize) -> Result<QuadResult> {
    let mut n = 16usize;
    let mut h = (hi - lo) / n as f64;
    let (f_lo, f_hi) = (f(lo), f(hi));
    let mut sum = 0.5 * (f_lo + f_hi);
    let mut abs_sum = 0.5 * (f_lo.abs() + f_hi.abs());
    for k in 1..n {
        let v = f(lo + k as f64 * h);
        sum += v;
        abs_sum += v.abs();
    }
    let mut prev = sum * h;
    let mut diff = f64::INFINITY;
    for _ in 0..max_levels {
        h *= 0.5;
        for k in 0..n {
            let v = f(lo + (2 * k + 1) as f64 * h);
            sum += v;
            abs_sum += v.abs();
        }
        n *= 2;
        let cur = sum * h;
        diff = (cur - prev).abs();
        // below this the difference is rounding noise
        let floor = 8.0 * f64::EPSILON * abs_sum * h;
        if diff <= rel_tol * cur.abs() || diff <= floor {
            return Ok(QuadResult { value: cur, err: diff.max(floor) });
        }
        prev = cur;
    }
    Err(Error::Evaluation { what: "trapezoid refinement".into(), partial: prev, bound: diff })
}

/// Wynn's epsilon extrapolation of a sequence of partial sums.
///
/// Returns the estimate with the smallest difference to its predecessor in
/// the same even column, and that difference as error estimate.
pub fn wynn_epsilon(s: &[f64]) -> QuadResult {
    let n = s.len();
    match n {
        0 => return QuadResult { value: f64::NAN, err: f64::INFINITY },
        1 => return QuadResult { value: s[0], err: f64::INFINITY },
        _ => {}
    }
    let mut best = QuadResult { value: s[n - 1], err: (s[n - 1] - s[n - 2]).abs() };
    let mut prev = vec![0.0; n + 1];
    let mut cur = s.to_vec();
    for j in 1..n {
        let mut next = Vec::with_capacity(n - j);
        for k in 0..n - j {
            let d = cur[k + 1] - cur[k];
            if d == 0.0 {
                return if j % 2 == 1 { QuadResult { value: cur[k + 1], err: best.err.min(cur[k + 1].abs() * f64::EPSILON) } } else { best };
            }
            next.push(prev[k + 1] + 1.0 / d);
        }
        if j % 2 == 0 && next.len() >= 2 {
            let m = next.len();
            let err = (next[m - 1] - next[m - 2]).abs();
            if err < best.err {
                best = QuadResult { value: next[m - 1], err };
            }
        }
        prev = cur;
        cur = next;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_and_smooth() {
        let r = adaptive_quad(|x| x, 0.0, 1.0, 1e-14).unwrap();
        assert_relative_eq!(r.value, 0.5, epsilon = 1e-15);
        let r = adaptive_quad(|x| x.sin(), 0.0, PI, 1e-13).unwrap();
        assert_relative_eq!(r.value, 2.0, epsilon = 1e-13);
    }

    #[test]
    fn half_line_and_endpoint_singularity() {
        let r = adaptive_quad(|x| (-x).exp(), 0.0, f64::INFINITY, 1e-13).unwrap();
        assert_relative_eq!(r.value, 1.0, epsilon = 1e-12);
        let r = adaptive_quad(|x| 1.0 / x.sqrt(), 0.0, 1.0, 1e-10).unwrap();
        assert_relative_eq!(r.value, 2.0, epsilon = 1e-9);
    }

    #[test]
    fn failure_reports_bound() {
        let opts = QuadOptions { abs_tol: 1e-15, rel_tol: 0.0, max_intervals: 3 };
        let e = adaptive_quad_with(|x| (50.0 * x).sin(), 0.0, 10.0, &opts).unwrap_err();
        assert!(matches!(e, Error::Evaluation { bound, .. } if bound > 0.0));
    }

    #[test]
    fn deterministic() {
        let f = |x: f64| (x * x).cos() * (-x).exp();
        let a = adaptive_quad(f, 0.0, f64::INFINITY, 1e-12).unwrap();
        let b = adaptive_quad(f, 0.0, f64::INFINITY, 1e-12).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }

    #[test]
    fn gauss_legendre_exactness() {
        for n in [1, 2, 5, 20, 33] {
            let rule = gauss_legendre(n);
            assert_relative_eq!(rule.1.iter().sum::<f64>(), 2.0, epsilon = 1e-14);
            let deg = 2 * n - 1;
            let v = gauss_legendre_panel(&|x: f64| x.powi(deg as i32 - 1), 0.0, 1.0, &rule);
            assert_relative_eq!(v, 1.0 / deg as f64, epsilon = 1e-14);
        }
    }

    #[test]
    fn trapezoid_gaussian() {
        let r = trapezoid(|x: f64| (-x * x).exp(), -7.0, 7.0, 1e-15, 10).unwrap();
        assert_relative_eq!(r.value, PI.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn wynn_accelerates_alternating_series() {
        // ln 2 = 1 - 1/2 + 1/3 - ...
        let mut s = Vec::new();
        let mut acc = 0.0;
        for k in 1..=20 {
            acc += if k % 2 == 1 { 1.0 } else { -1.0 } / k as f64;
            s.push(acc);
        }
        let r = wynn_epsilon(&s);
        assert!((r.value - 2f64.ln()).abs() < 1e-12);
        assert!(r.err < 1e-10);
    }
}
