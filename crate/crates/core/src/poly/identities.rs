//! Exact differential identities satisfied by the families.
//!
//! Each `*_residual` function returns the polynomial left-hand side minus the
//! right-hand side; the `check_*` wrappers turn a nonzero residual into
//! [`Error::NonzeroResidual`].

use num_bigint::BigInt;

use super::{polynomials, ExactPoly, Family, FamilySpec};
use crate::error::{Error, Result};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn partner(spec: FamilySpec) -> FamilySpec {
    let other = match spec.family() {
        Family::EvenP => Family::EvenQ,
        Family::EvenQ => Family::EvenP,
        Family::OddP => Family::OddQ,
        Family::OddQ => Family::OddP,
    };
    FamilySpec::new(other, spec.exponent()).expect("partner has the same parity")
}

/// Second-order equation in `z`.
///
/// Even families: `2(N+2) z f'' + (k - z) f' + n f` with `k = 2N+2` (p) or
/// `2N+6` (q). Odd families: the coupled pair
/// `4(N+2) z P'' + 4(N+3) P' + 2z Q' + Q - (2n+1) P` and
/// `4(N+2) z Q'' + 4(N+1) Q' + 2z P' + P - (2n+1) Q`, the line chosen by the
/// family of `spec`.
pub fn ode_residual(spec: FamilySpec, n: usize) -> ExactPoly {
    let nn = spec.exponent();
    let l = big(spec.lambda());
    let f = polynomials(spec, n).pop().unwrap();
    let f1 = f.derivative();
    let f2 = f1.derivative();
    let z = ExactPoly::monomial(1);
    match spec.family() {
        Family::EvenP | Family::EvenQ => {
            let k = if spec.family() == Family::EvenP { 2 * nn + 2 } else { 2 * nn + 6 };
            let lin = &ExactPoly::constant(big(k)) - &z;
            &(&f2.shift().scale(&l) + &(&lin * &f1)) + &f.scale(&big(n as i64))
        }
        Family::OddP | Family::OddQ => {
            let g = polynomials(partner(spec), n).pop().unwrap();
            let k = if spec.family() == Family::OddP { 4 * (nn + 3) } else { 4 * (nn + 1) };
            let lhs = &(&f2.shift().scale(&(&l * 2)) + &f1.scale(&big(k)))
                + &(&g.derivative().shift().scale(&big(2)) + &g);
            &lhs - &f.scale(&big(2 * n as i64 + 1))
        }
    }
}

/// First-order relation linking `f_n`, `f_n'` and `f_{n+1}`.
///
/// Even: `2(N+2) z f_n' + f_{n+1} + [2(N+2)(n+1) -+ 2 - z] f_n` (`-` for p).
/// Odd: `4(N+2) z P_n' - 2P_{n+1} + z Q_n + [4(N+2)(n+1) + 2 + z] P_n` and the
/// same with P, Q exchanged and `+2` replaced by `-2`.
pub fn diff_relation_residual(spec: FamilySpec, n: usize) -> ExactPoly {
    let l = spec.lambda();
    let table = polynomials(spec, n + 1);
    let (f, next) = (&table[n], &table[n + 1]);
    let z = ExactPoly::monomial(1);
    let ni = n as i64 + 1;
    match spec.family() {
        Family::EvenP | Family::EvenQ => {
            let shift = if spec.family() == Family::EvenP { -2 } else { 2 };
            let lin = &ExactPoly::constant(big(l * ni + shift)) - &z;
            &(&f.derivative().shift().scale(&big(l)) + next) + &(&lin * f)
        }
        Family::OddP | Family::OddQ => {
            let g = polynomials(partner(spec), n).pop().unwrap();
            let shift = if spec.family() == Family::OddP { 2 } else { -2 };
            let lin = &ExactPoly::constant(big(2 * l * ni + shift)) + &z;
            let lhs = &f.derivative().shift().scale(&big(2 * l)) - &next.scale(&big(2));
            &(&lhs + &g.shift()) + &(&lin * f)
        }
    }
}

fn check(identity: &'static str, n: usize, r: ExactPoly) -> Result<ExactPoly> {
    match r.first_nonzero() {
        None => Ok(r),
        Some((k, c)) => Err(Error::NonzeroResidual {
            identity,
            degree: n,
            coeff: format!("z^{k}: {c}"),
        }),
    }
}

pub fn check_ode_identity(spec: FamilySpec, n: usize) -> Result<ExactPoly> {
    check("ode", n, ode_residual(spec, n))
}

pub fn check_diff_relation(spec: FamilySpec, n: usize) -> Result<ExactPoly> {
    check("differential relation", n, diff_relation_residual(spec, n))
}

/// Physicists' Hermite polynomials from `H_{k+1} = 2x H_k - 2k H_{k-1}`.
pub fn hermite(k_max: usize) -> Vec<ExactPoly> {
    let mut h = vec![ExactPoly::one(), ExactPoly::from_i64(&[0, 2])];
    for k in 1..k_max {
        let next = &h[k].shift().scale(&big(2)) - &h[k - 1].scale(&big(2 * k as i64));
        h.push(next);
    }
    h.truncate(k_max + 1);
    h
}

/// For N = 0: `p_n(4x^2) = H_{2n}(x)` and `2x q_n(4x^2) = H_{2n+1}(x)`.
pub fn check_hermite(n_max: usize) -> Result<()> {
    let h = hermite(2 * n_max + 1);
    let p = polynomials(FamilySpec::new(Family::EvenP, 0)?, n_max);
    let q = polynomials(FamilySpec::new(Family::EvenQ, 0)?, n_max);
    let four = big(4);
    for n in 0..=n_max {
        check("hermite even", n, &p[n].substitute_monomial(&four, 2) - &h[2 * n])?;
        let odd = q[n].substitute_monomial(&four, 2).shift().scale(&big(2));
        check("hermite odd", n, &odd - &h[2 * n + 1])?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: Family, n: i64) -> FamilySpec {
        FamilySpec::new(f, n).unwrap()
    }

    #[test]
    fn worked_instances() {
        // 8z p2'' + (6 - z) p2' + 2 p2 with p2 = z^2 - 28z + 84
        let p2 = ExactPoly::from_i64(&[84, -28, 1]);
        let z = ExactPoly::monomial(1);
        let manual = &(&p2.derivative().derivative().shift().scale(&big(8))
            + &(&(&ExactPoly::constant(big(6)) - &z) * &p2.derivative()))
            + &p2.scale(&big(2));
        assert!(manual.is_zero());
        assert!(ode_residual(spec(Family::EvenP, 2), 2).is_zero());

        // 8z q1' + q2 + (18 - z) q1
        let q1 = ExactPoly::from_i64(&[-10, 1]);
        let q2 = ExactPoly::from_i64(&[180, -36, 1]);
        let manual = &(&q1.derivative().shift().scale(&big(8)) + &q2)
            + &(&(&ExactPoly::constant(big(18)) - &z) * &q1);
        assert!(manual.is_zero());
        assert!(diff_relation_residual(spec(Family::EvenQ, 2), 1).is_zero());

        assert!(check_ode_identity(spec(Family::OddP, 1), 1).is_ok());
        assert!(check_ode_identity(spec(Family::OddQ, 1), 1).is_ok());
        assert!(check_diff_relation(spec(Family::OddQ, -1), 2).is_ok());
    }

    #[test]
    fn all_identities_vanish() {
        for nn in -1..=5 {
            for f in Family::for_exponent(nn) {
                let s = spec(f, nn);
                for n in 0..=10 {
                    check_ode_identity(s, n).unwrap();
                    check_diff_relation(s, n).unwrap();
                }
            }
        }
    }

    #[test]
    fn wrong_coefficient_is_detected() {
        let p2 = ExactPoly::from_i64(&[84, -28, 1]);
        let z = ExactPoly::monomial(1);
        let with_six = &(&p2.derivative().derivative().shift().scale(&big(6))
            + &(&(&ExactPoly::constant(big(6)) - &z) * &p2.derivative()))
            + &p2.scale(&big(2));
        assert_eq!(with_six, ExactPoly::from_i64(&[0, -4]));
        let err = check("ode", 2, with_six).unwrap_err();
        assert!(matches!(err, Error::NonzeroResidual { degree: 2, .. }));
    }

    #[test]
    fn hermite_recurrence_and_coincidence() {
        let h = hermite(4);
        assert_eq!(h[2], ExactPoly::from_i64(&[-2, 0, 4]));
        assert_eq!(h[3], ExactPoly::from_i64(&[0, -12, 0, 8]));
        check_hermite(8).unwrap();
    }
}
