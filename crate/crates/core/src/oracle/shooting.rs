//! Shooting eigensolver for `-y'' + x^(2N+2) y = E x^N y`.

use serde::Serialize;

use crate::error::{param, Error, Result};

/// Parameters of one shooting run.
///
/// The integrator takes local steps `step / max(1, sqrt|q(x)|)` with
/// `q = x^(2N+2) - E x^N`, so `step` bounds the phase advanced per step.
/// For `N = -1` the equation is singular at the origin; `match_point` is
/// then the radius `r` of the gap `[-r, r]` bridged by Frobenius series.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShootingConfig {
    pub half_width: f64,
    pub step: f64,
    pub match_point: f64,
    pub bracket: (f64, f64),
    pub tol_e: f64,
    /// Grid spacing used by [`spectrum_scan`] to bracket sign changes.
    pub scan_step: f64,
}

impl ShootingConfig {
    /// Defaults for energies in `bracket`: `L` is chosen so that the
    /// decaying solution loses at least `e^{-40}` beyond the turning point.
    pub fn new(exponent: i64, bracket: (f64, f64)) -> Result<Self> {
        check_exponent(exponent)?;
        let (lo, hi) = bracket;
        if !(lo.is_finite() && hi.is_finite()) {
            return param(format!("bracket ({lo}, {hi}) must be finite"));
        }
        let e_max = lo.abs().max(hi.abs()).max(1.0);
        let k = (exponent + 2) as f64;
        let turning = e_max.powf(1.0 / k);
        let mut big_l = turning + 2.5;
        while forbidden_action(exponent, e_max, turning, big_l) < 40.0 {
            big_l += 0.5;
        }
        Ok(ShootingConfig {
            half_width: big_l,
            step: 0.01,
            match_point: if exponent == -1 { 0.5 } else { 0.0 },
            bracket,
            tol_e: 1e-9,
            scan_step: 0.2,
        })
    }

    pub fn validate(&self, exponent: i64) -> Result<()> {
        check_exponent(exponent)?;
        let (lo, hi) = self.bracket;
        if !(lo <= hi) {
            return param(format!("bracket ({lo}, {hi}) is empty or not finite"));
        }
        let turning = lo.abs().max(hi.abs()).powf(1.0 / (exponent + 2) as f64);
        if !(self.half_width > turning + 2.0) {
            return param(format!("half width {} must exceed turning point {turning} + 2", self.half_width));
        }
        if !(self.step > 0.0 && self.step < 0.1) {
            return param(format!("step {} must lie in (0, 0.1)", self.step));
        }
        if !(self.tol_e > 0.0 && self.scan_step > 0.0) {
            return param("tol_e and scan_step must be positive");
        }
        let m = self.match_point;
        if exponent == -1 {
            if !(m > 0.0 && m < self.half_width) {
                return param(format!("N = -1 needs a gap radius in (0, L), got {m}"));
            }
        } else if !(m.abs() < self.half_width) {
            return param(format!("match point {m} outside (-L, L)"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ShootResult {
    pub energy: f64,
    /// Normalized Wronskian of the two inward solutions at the match point.
    pub matching_defect: f64,
    pub n_nodes: usize,
    pub converged: bool,
}

/// Refine the single eigenvalue inside `cfg.bracket`.
pub fn shoot_eigenvalue(exponent: i64, cfg: &ShootingConfig) -> Result<ShootResult> {
    cfg.validate(exponent)?;
    let (lo, hi) = cfg.bracket;
    let d_lo = shoot(exponent, lo, cfg)?.defect;
    let d_hi = shoot(exponent, hi, cfg)?.defect;
    refine(exponent, cfg, (lo, d_lo), (hi, d_hi))
}

/// All eigenvalues in `range`, sorted.
pub fn spectrum_scan(exponent: i64, range: (f64, f64), cfg: &ShootingConfig) -> Result<Vec<ShootResult>> {
    let (lo, hi) = range;
    if !(lo.is_finite() && hi.is_finite()) {
        return param(format!("range ({lo}, {hi}) must be finite"));
    }
    if lo > hi {
        return Ok(Vec::new());
    }
    let cfg = ShootingConfig { bracket: range, ..cfg.clone() };
    cfg.validate(exponent)?;
    let cells = ((hi - lo) / cfg.scan_step).ceil().max(1.0) as usize;
    let grid: Vec<f64> = (0..=cells).map(|i| lo + (hi - lo) * i as f64 / cells as f64).collect();
    let defects = grid
        .iter()
        .map(|&e| shoot(exponent, e, &cfg).map(|s| s.defect))
        .collect::<Result<Vec<_>>>()?;
    let mut out: Vec<ShootResult> = Vec::new();
    for i in 0..cells {
        let (a, b) = ((grid[i], defects[i]), (grid[i + 1], defects[i + 1]));
        if (a.1 < 0.0) == (b.1 < 0.0) {
            continue;
        }
        let r = refine(exponent, &cfg, a, b)?;
        if let Some(prev) = out.last() {
            if (r.energy - prev.energy).abs() < 10.0 * cfg.tol_e {
                return Err(Error::OverlappingBrackets(r.energy));
            }
        }
        out.push(r);
    }
    Ok(out)
}

fn check_exponent(exponent: i64) -> Result<()> {
    if exponent < -1 {
        return param(format!("exponent N={exponent} must be >= -1"));
    }
    Ok(())
}

fn q(exponent: i64, e: f64, x: f64) -> f64 {
    let xn = x.powi(exponent as i32);
    xn * x * x * xn - e * xn
}

/// `int_t^L sqrt(q)` for the worse of the two signs of `x^N`.
fn forbidden_action(exponent: i64, e_max: f64, from: f64, to: f64) -> f64 {
    let n = ((to - from) / 0.01).ceil().max(1.0) as usize;
    let h = (to - from) / n as f64;
    (0..n)
        .map(|i| {
            let x = from + (i as f64 + 0.5) * h;
            q(exponent, e_max, x).max(0.0).sqrt() * h
        })
        .sum()
}

/// Inward solution from one boundary, stopped at `to`.
struct Piece {
    y: f64,
    dy: f64,
    nodes: usize,
    first_sign: bool,
    last_sign: bool,
}

fn integrate(exponent: i64, e: f64, from: f64, to: f64, step: f64) -> Result<Piece> {
    let dir = (to - from).signum();
    let q0 = q(exponent, e, from);
    let dq = (q(exponent, e, from + 1e-6) - q(exponent, e, from - 1e-6)) / 2e-6;
    if !(q0 > 0.0) {
        return Err(Error::Step { x: from, reason: format!("boundary not in forbidden region for E={e}") });
    }
    // decaying WKB branch: y ~ q^{-1/4} exp(-+ int sqrt q)
    let (mut x, mut y, mut v) = (from, 1.0, dir * q0.sqrt() - dq / (4.0 * q0));
    let f = |x: f64, y: f64| q(exponent, e, x) * y;
    let mut nodes = 0;
    let first_sign = y >= 0.0;
    let mut last_sign = first_sign;
    loop {
        let remaining = (to - x) * dir;
        if remaining <= 0.0 {
            break;
        }
        let h_loc = step / q(exponent, e, x).abs().sqrt().max(1.0);
        let (h, last) = if h_loc >= remaining { (remaining * dir, true) } else { (h_loc * dir, false) };
        let k1 = (v, f(x, y));
        let k2 = (v + 0.5 * h * k1.1, f(x + 0.5 * h, y + 0.5 * h * k1.0));
        let k3 = (v + 0.5 * h * k2.1, f(x + 0.5 * h, y + 0.5 * h * k2.0));
        let k4 = (v + h * k3.1, f(x + h, y + h * k3.0));
        y += h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0);
        v += h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1);
        x = if last { to } else { x + h };
        if !(y.is_finite() && v.is_finite()) {
            return Err(Error::Step { x, reason: format!("solution overflowed at E={e}") });
        }
        let norm = y.abs().max(v.abs());
        if norm > 1e100 {
            y /= norm;
            v /= norm;
        }
        if !last && y != 0.0 {
            let s = y > 0.0;
            if s != last_sign {
                nodes += 1;
                last_sign = s;
            }
        }
    }
    Ok(Piece { y, dy: v, nodes, first_sign, last_sign })
}

/// Frobenius basis of `x y'' = (x - E) y` at the origin: `y1 = x + ...`
/// and `y2 = 1 + ... - E y1 ln|x|`. Returns `(y1, y1', y2, y2')`.
fn frobenius(e: f64, x: f64) -> (f64, f64, f64, f64) {
    const TERMS: usize = 80;
    let mut a = vec![0.0; TERMS];
    let mut b = vec![0.0; TERMS + 1];
    a[0] = 1.0;
    for j in 1..TERMS {
        let prev2 = if j >= 2 { a[j - 2] } else { 0.0 };
        a[j] = (prev2 - e * a[j - 1]) / (j * (j + 1)) as f64;
    }
    let c = -e;
    b[0] = 1.0;
    for j in 1..TERMS {
        b[j + 1] = (b[j - 1] - e * b[j] - c * a[j] * (2 * j + 1) as f64) / (j * (j + 1)) as f64;
    }
    let (mut y1, mut dy1, mut s2, mut ds2) = (0.0, 0.0, 0.0, 0.0);
    let mut p = 1.0; // x^k
    for k in 0..TERMS {
        dy1 += a[k] * (k + 1) as f64 * p;
        y1 += a[k] * p * x;
        s2 += b[k] * p;
        if k < TERMS {
            ds2 += b[k + 1] * (k + 1) as f64 * p;
        }
        p *= x;
    }
    let ln = x.abs().ln();
    (y1, dy1, s2 + c * y1 * ln, ds2 + c * (dy1 * ln + y1 / x))
}

/// Coefficients `(A, B)` of `y = A y2 + B y1` matching `(y, y')` at `x`.
fn frobenius_coeffs(e: f64, x: f64, y: f64, dy: f64) -> (f64, f64) {
    let (y1, dy1, y2, dy2) = frobenius(e, x);
    let det = y2 * dy1 - y1 * dy2;
    ((y * dy1 - y1 * dy) / det, (y2 * dy - y * dy2) / det)
}

struct Shot {
    defect: f64,
    nodes: usize,
}

fn shoot(exponent: i64, e: f64, cfg: &ShootingConfig) -> Result<Shot> {
    let big_l = cfg.half_width;
    if exponent == -1 {
        let r = cfg.match_point;
        let left = integrate(exponent, e, -big_l, -r, cfg.step)?;
        let right = integrate(exponent, e, big_l, r, cfg.step)?;
        let (al, bl) = frobenius_coeffs(e, -r, left.y, left.dy);
        let (ar, br) = frobenius_coeffs(e, r, right.y, right.dy);
        let defect = (al * br - bl * ar) / (al.hypot(bl) * ar.hypot(br));
        let sigma = (al * ar + bl * br) / (ar * ar + br * br);
        // signs across the gap from the left-fitted combination
        let mut nodes = left.nodes + right.nodes;
        let mut sign = left.last_sign;
        const GAP_SAMPLES: usize = 200;
        for i in 0..=GAP_SAMPLES {
            let x = -r + 2.0 * r * i as f64 / GAP_SAMPLES as f64;
            let (y1, _, y2, _) = if x == 0.0 { (0.0, 0.0, 1.0, 0.0) } else { frobenius(e, x) };
            let v = al * y2 + bl * y1;
            if v != 0.0 && (v > 0.0) != sign {
                nodes += 1;
                sign = v > 0.0;
            }
        }
        if (right.last_sign == (sigma > 0.0)) != sign {
            nodes += 1;
        }
        return Ok(Shot { defect, nodes });
    }
    let m = cfg.match_point;
    let left = integrate(exponent, e, -big_l, m, cfg.step)?;
    let right = integrate(exponent, e, big_l, m, cfg.step)?;
    let w = left.y * right.dy - left.dy * right.y;
    let defect = w / (left.y.hypot(left.dy) * right.y.hypot(right.dy));
    let sigma = (left.y * right.y + left.dy * right.dy) / (right.y * right.y + right.dy * right.dy);
    let mut nodes = left.nodes + right.nodes;
    if left.last_sign != (right.last_sign == (sigma > 0.0)) {
        nodes += 1;
    }
    let _ = right.first_sign;
    Ok(Shot { defect, nodes })
}

fn refine(exponent: i64, cfg: &ShootingConfig, a: (f64, f64), b: (f64, f64)) -> Result<ShootResult> {
    let ((mut lo, mut d_lo), (mut hi, mut d_hi)) = (a, b);
    if d_lo == 0.0 {
        return finish(exponent, cfg, lo, true);
    }
    if d_hi == 0.0 {
        return finish(exponent, cfg, hi, true);
    }
    if (d_lo < 0.0) == (d_hi < 0.0) {
        return Err(Error::Bracket { lo, hi });
    }
    let mut side = 0i8;
    for _ in 0..200 {
        if hi - lo < cfg.tol_e {
            break;
        }
        let mut e = (lo * d_hi - hi * d_lo) / (d_hi - d_lo);
        if !(e > lo && e < hi) {
            e = 0.5 * (lo + hi);
        }
        let d = shoot(exponent, e, cfg)?.defect;
        if d == 0.0 {
            return finish(exponent, cfg, e, true);
        }
        if (d < 0.0) == (d_lo < 0.0) {
            lo = e;
            d_lo = d;
            if side == -1 {
                d_hi *= 0.5;
            }
            side = -1;
        } else {
            hi = e;
            d_hi = d;
            if side == 1 {
                d_lo *= 0.5;
            }
            side = 1;
        }
    }
    let e = if d_lo.abs() < d_hi.abs() { lo } else { hi };
    finish(exponent, cfg, e, hi - lo < cfg.tol_e)
}

fn finish(exponent: i64, cfg: &ShootingConfig, e: f64, narrow: bool) -> Result<ShootResult> {
    let s = shoot(exponent, e, cfg)?;
    Ok(ShootResult {
        energy: e,
        matching_defect: s.defect,
        n_nodes: s.nodes,
        converged: narrow && s.defect.abs() < 1e-6,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(n: i64, lo: f64, hi: f64) -> ShootResult {
        let cfg = ShootingConfig::new(n, (lo, hi)).unwrap();
        shoot_eigenvalue(n, &cfg).unwrap()
    }

    #[test]
    fn harmonic_oscillator() {
        let r = solve(0, 0.5, 1.5);
        assert!(r.converged);
        assert!((r.energy - 1.0).abs() < 1e-8, "{}", r.energy);
        assert_eq!(r.n_nodes, 0);
    }

    #[test]
    fn single_brackets() {
        assert!((solve(2, 2.0, 4.0).energy - 3.0).abs() < 1e-6);
        assert!((solve(1, -4.0, -2.0).energy + 3.0).abs() < 1e-6);
        assert!((solve(-1, 0.5, 1.5).energy - 1.0).abs() < 1e-6);
    }

    #[test]
    fn frobenius_basis_solves_equation() {
        let e = 2.3;
        for &x in &[0.4, -0.3] {
            let h = 1e-4;
            let y2 = |t: f64| frobenius(e, t).2;
            let d2 = (y2(x + h) - 2.0 * y2(x) + y2(x - h)) / (h * h);
            assert!((x * d2 - (x - e) * y2(x)).abs() < 1e-5);
            let (_, dy1, _, dy2) = frobenius(e, x);
            let num1 = (frobenius(e, x + h).0 - frobenius(e, x - h).0) / (2.0 * h);
            assert!((num1 - dy1).abs() < 1e-7);
            assert!(((y2(x + h) - y2(x - h)) / (2.0 * h) - dy2).abs() < 1e-7);
        }
    }

    #[test]
    fn empty_and_bad_brackets() {
        let cfg = ShootingConfig::new(2, (5.5, 5.6)).unwrap();
        assert!(spectrum_scan(2, (5.5, 5.6), &cfg).unwrap().is_empty());
        assert!(matches!(shoot_eigenvalue(2, &cfg), Err(Error::Bracket { .. })));
        let mut bad = cfg.clone();
        bad.step = 0.5;
        assert!(shoot_eigenvalue(2, &bad).is_err());
        assert!(ShootingConfig::new(0, (f64::NAN, 1.0)).is_err());
    }

    #[test]
    fn node_counts_follow_index() {
        let cfg = ShootingConfig::new(0, (0.0, 8.0)).unwrap();
        let found = spectrum_scan(0, (0.0, 8.0), &cfg).unwrap();
        let nodes: Vec<usize> = found.iter().map(|r| r.n_nodes).collect();
        assert_eq!(nodes, vec![0, 1, 2, 3]);
    }
}
