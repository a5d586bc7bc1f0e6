use num_bigint::BigInt;

use super::{big_to_f64, ExactPoly, Family, FamilySpec};

/// Coefficients of `f_{n+1} = (z - b) f_n - c f_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceCoeffs {
    pub b: BigInt,
    pub c: BigInt,
}

/// Closed-form recurrence coefficients at index `n`.
///
/// For the odd families the formula is only used from `n = 1`; at `n = 0` it
/// returns `c = -1`, which never enters a polynomial (see [`step_coeffs`]).
pub fn recurrence_coeffs(spec: FamilySpec, n: usize) -> RecurrenceCoeffs {
    let l = BigInt::from(spec.lambda());
    let n = BigInt::from(n);
    let ln = &l * &n;
    let mid: BigInt = &l * (BigInt::from(2) * &n + 1);
    let (b, c) = match spec.family() {
        Family::EvenP => (&mid - 2, &ln * (&ln - 2)),
        Family::EvenQ => (&mid + 2, &ln * (&ln + 2)),
        Family::OddP | Family::OddQ => (-mid, &ln * &ln - 1),
    };
    RecurrenceCoeffs { b, c }
}

/// The coefficients actually used to build `f_{n+1}` from `f_n, f_{n-1}`.
///
/// At `n = 0` this is `b = -f_1(0)`, `c = 0`; for the even families that
/// agrees with [`recurrence_coeffs`], for the odd families it does not.
pub fn step_coeffs(spec: FamilySpec, n: usize) -> RecurrenceCoeffs {
    if n > 0 {
        return recurrence_coeffs(spec, n);
    }
    let l = spec.lambda();
    let b = match spec.family() {
        Family::EvenP => l - 2,
        Family::EvenQ => l + 2,
        Family::OddP => -(l + 1),
        Family::OddQ => -(l - 1),
    };
    RecurrenceCoeffs { b: BigInt::from(b), c: BigInt::from(0) }
}

/// `f_0, ..., f_{n_max}` of a family.
pub fn polynomials(spec: FamilySpec, n_max: usize) -> Vec<ExactPoly> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(ExactPoly::one());
    let mut prev = ExactPoly::zero();
    for n in 0..n_max {
        let RecurrenceCoeffs { b, c } = step_coeffs(spec, n);
        let cur = &out[n];
        let next = &(&cur.shift() - &cur.scale(&b)) - &prev.scale(&c);
        prev = cur.clone();
        out.push(next);
    }
    out
}

/// The degree-`n` member of a family.
pub fn polynomial(spec: FamilySpec, n: usize) -> ExactPoly {
    polynomials(spec, n).pop().expect("table is never empty")
}

/// Evaluate `f_n(z)` in floating point by running the three-term
/// recurrence, which is better conditioned than Horner on the expanded
/// integer coefficients.
pub fn evaluate_f64(spec: FamilySpec, n: usize, z: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let RecurrenceCoeffs { b, c } = step_coeffs(spec, k);
        let next = (z - big_to_f64(&b)) * cur - big_to_f64(&c) * prev;
        prev = cur;
        cur = next;
    }
    cur
}
