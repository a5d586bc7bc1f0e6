use super::{eigenfunction, eigenfunction_odd, EigenSpec};
use crate::error::{domain, Result};

/// Finite-difference step used for residual checks: `2e-3 max(1, |x|)`.
///
/// With Richardson extrapolation the truncation error is `O(h^6)`, so a
/// larger step than usual keeps the `eps/h^2` rounding term below `1e-10`.
pub fn default_fd_step(x: f64) -> f64 {
    2e-3 * x.abs().max(1.0)
}

/// Second derivative by the 5-point central stencil, Richardson-extrapolated
/// from steps `h` and `h/2`.
pub fn second_derivative<F: Fn(f64) -> Result<f64>>(f: F, x: f64, h: f64) -> Result<f64> {
    let stencil = |h: f64| -> Result<f64> {
        let (m2, m1, c, p1, p2) = (f(x - 2.0 * h)?, f(x - h)?, f(x)?, f(x + h)?, f(x + 2.0 * h)?);
        Ok((-m2 + 16.0 * m1 - 30.0 * c + 16.0 * p1 - p2) / (12.0 * h * h))
    };
    let coarse = stencil(h)?;
    let fine = stencil(0.5 * h)?;
    Ok((16.0 * fine - coarse) / 15.0)
}

/// Relative residual of `-y'' + x^{2N+2} y = E x^N y` for the canonical
/// eigenfunction of `spec`:
/// `|-y'' + x^{2N+2} y - E x^N y| / (|y| (1 + x^{2N+2} + |E| |x|^N))`.
pub fn ode_residual(spec: &EigenSpec, x: f64, h: f64) -> Result<f64> {
    ode_residual_with_energy(spec, spec.energy() as f64, x, h)
}

/// As [`ode_residual`] but with an arbitrary energy in the equation, to
/// probe the sensitivity of the check.
pub fn ode_residual_with_energy(spec: &EigenSpec, energy: f64, x: f64, h: f64) -> Result<f64> {
    let nn = spec.exponent() as i32;
    if nn == -1 && (x - 2.0 * h) * (x + 2.0 * h) <= 0.0 {
        return domain(format!("stencil around x={x} crosses the singular point x=0"));
    }
    // one route for the whole stencil; for odd N the Tricomi form unless the
    // stencil straddles the origin
    let odd_side = nn % 2 != 0 && (x - 2.0 * h) * (x + 2.0 * h) > 0.0;
    let eval = |t: f64| {
        if odd_side {
            eigenfunction_odd(spec.exponent(), spec.index(), t)
        } else {
            eigenfunction(spec, t)
        }
    };
    let y = eval(x)?;
    let d2 = second_derivative(eval, x, h)?;
    let pot = x.powi(2 * nn + 2);
    let weight = x.powi(nn);
    let r = -d2 + pot * y - energy * weight * y;
    Ok(r.abs() / (y.abs() * (1.0 + pot + energy.abs() * weight.abs())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_satisfy_the_equation() {
        for nn in -1..=3 {
            let range = if nn % 2 == 0 { 0..=4 } else { -3..=3 };
            for n in range {
                let spec = EigenSpec::new(nn, n).unwrap();
                for &x in &[0.5, 1.0, 1.8] {
                    let r = ode_residual(&spec, x, default_fd_step(x)).unwrap();
                    assert!(r < 1e-7, "N={nn} n={n} x={x} r={r:e}");
                }
            }
        }
    }

    #[test]
    fn even_family_tight_residual() {
        for n in 0..=4 {
            let spec = EigenSpec::new(2, n).unwrap();
            for &x in &[0.3, 1.1, 2.0] {
                assert!(ode_residual(&spec, x, default_fd_step(x)).unwrap() < 1e-8);
            }
        }
    }

    #[test]
    fn wrong_energy_is_detected() {
        for (nn, n) in [(2, 1), (1, -1), (-1, 0)] {
            let spec = EigenSpec::new(nn, n).unwrap();
            let worst = [0.5, 1.0, 1.8]
                .iter()
                .map(|&x| ode_residual_with_energy(&spec, spec.energy() as f64 + 0.5, x, default_fd_step(x)).unwrap())
                .fold(0.0, f64::max);
            assert!(worst > 1e-3, "N={nn} n={n}: {worst:e}");
        }
    }

    #[test]
    fn origin_for_even_parity() {
        let spec = EigenSpec::new(2, 2).unwrap();
        assert!(ode_residual(&spec, 0.0, default_fd_step(0.0)).unwrap() < 1e-8);
        let minus_one = EigenSpec::new(-1, 0).unwrap();
        assert!(ode_residual(&minus_one, 0.001, 1e-3).is_err());
    }
}
