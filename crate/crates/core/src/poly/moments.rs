//! Moments, continued fractions and norms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{recurrence_coeffs, step_coeffs, ExactPoly, Family, FamilySpec, RecurrenceCoeffs};
use crate::error::{param, Error, Result};

/// First `count` coefficients `alpha_1, alpha_2, ...` of the S-fraction
/// `1/(1 - alpha_1 t/(1 - alpha_2 t/(1 - ...)))` of a family's moments.
///
/// They come in pairs indexed by `j = 1, 2, ...`:
/// p: `(2j(N+2)-2, 2j(N+2))`, q: `(2j(N+2)+2, 2j(N+2))`,
/// P: `(2j(N+2)+1, 2j(N+2)-1)`, Q: `(2j(N+2)-1, 2j(N+2)+1)`.
pub fn sfraction_coeffs(spec: FamilySpec, count: usize) -> Vec<BigInt> {
    let l = spec.lambda();
    (1..=count)
        .map(|k| {
            let jl = l * k.div_ceil(2) as i64;
            let first = k % 2 == 1;
            let v = match (spec.family(), first) {
                (Family::EvenP, true) => jl - 2,
                (Family::EvenQ, true) => jl + 2,
                (Family::EvenP | Family::EvenQ, false) => jl,
                (Family::OddP, true) | (Family::OddQ, false) => jl + 1,
                (Family::OddP, false) | (Family::OddQ, true) => jl - 1,
            };
            BigInt::from(v)
        })
        .collect()
}

/// Moments `a_0, ..., a_K` of a family's weight together with the S-fraction
/// they were expanded from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSequence {
    values: Vec<BigInt>,
    family: FamilySpec,
    sfrac: Vec<BigInt>,
}

impl MomentSequence {
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn family(&self) -> FamilySpec {
        self.family
    }

    pub fn sfrac(&self) -> &[BigInt] {
        &self.sfrac
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Moment seen by the orthogonality functional: `a_k` for the even
    /// families, `(-1)^k a_k` for the odd ones (their recurrence shifts are
    /// negative while the S-fraction coefficients are positive).
    pub fn signed(&self, k: usize) -> BigInt {
        let a = self.values[k].clone();
        if !self.family.family().is_even() && k % 2 == 1 {
            -a
        } else {
            a
        }
    }
}

/// Power series of `1 / g` modulo `t^len`, for `g_0 = 1`.
fn series_reciprocal(g: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut h = vec![BigInt::zero(); len];
    h[0] = BigInt::one();
    for m in 1..len {
        let mut acc = BigInt::zero();
        for j in 1..=m.min(g.len() - 1) {
            acc += &g[j] * &h[m - j];
        }
        h[m] = -acc;
    }
    h
}

/// Expand the truncated S-fraction into `count` moments `a_0 .. a_{count-1}`.
///
/// The fraction is folded from the bottom: `F <- 1/(1 - alpha_k t F)` for
/// `k = 2*count, ..., 1`, every step exact modulo `t^count`.
pub fn moments_from_sfraction(spec: FamilySpec, count: usize) -> Result<MomentSequence> {
    if count == 0 {
        return param("moment count must be at least 1");
    }
    let sfrac = sfraction_coeffs(spec, 2 * count);
    let mut f = vec![BigInt::zero(); count];
    f[0] = BigInt::one();
    for alpha in sfrac.iter().rev() {
        let mut g = vec![BigInt::zero(); count];
        g[0] = BigInt::one();
        for k in 1..count {
            g[k] = -(alpha * &f[k - 1]);
        }
        f = series_reciprocal(&g, count);
    }
    Ok(MomentSequence { values: f, family: spec, sfrac: sfrac[..count].to_vec() })
}

/// The linear functional `L[f g] = sum_k (f g)_k * signed(k)`.
pub fn moment_functional(moments: &MomentSequence, f: &ExactPoly, g: &ExactPoly) -> Result<BigInt> {
    let h = f * g;
    let needed = h.degree().map_or(0, |d| d + 1);
    if needed > moments.len() {
        return param(format!(
            "product of degree {} needs {needed} moments, only {} available",
            needed.saturating_sub(1),
            moments.len()
        ));
    }
    Ok(h.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * moments.signed(k))
        .sum())
}

/// Squared norm `L[f_n^2] = c_1 c_2 ... c_n`.
pub fn norm_exact(spec: FamilySpec, n: usize) -> BigInt {
    (1..=n).map(|k| recurrence_coeffs(spec, k).c).product()
}

/// Contract an S-fraction into J-fraction coefficients with the family's
/// sign convention: `b_0 = s alpha_1`, `b_n = s (alpha_{2n} + alpha_{2n+1})`,
/// `c_n = alpha_{2n-1} alpha_{2n}`, where `s = -1` for the odd families.
pub fn contraction(spec: FamilySpec, n_max: usize) -> Vec<RecurrenceCoeffs> {
    let a = sfraction_coeffs(spec, 2 * n_max + 1);
    let sign = if spec.family().is_even() { BigInt::one() } else { -BigInt::one() };
    (0..=n_max)
        .map(|n| {
            if n == 0 {
                RecurrenceCoeffs { b: &sign * &a[0], c: BigInt::zero() }
            } else {
                RecurrenceCoeffs {
                    b: &sign * (&a[2 * n - 1] + &a[2 * n]),
                    c: &a[2 * n - 2] * &a[2 * n - 1],
                }
            }
        })
        .collect()
}

/// Check that the contracted S-fraction reproduces the recurrence for `n <= n_max`.
pub fn check_contraction(spec: FamilySpec, n_max: usize) -> Result<()> {
    for (n, got) in contraction(spec, n_max).into_iter().enumerate() {
        let want = step_coeffs(spec, n);
        if got != want {
            return Err(Error::NonzeroResidual {
                identity: "continued-fraction contraction",
                degree: n,
                coeff: format!("(b, c) = ({}, {}) vs ({}, {})", got.b, got.c, want.b, want.c),
            });
        }
    }
    Ok(())
}

/// `det[a_{i+j}]_{0 <= i, j <= m}` by fraction-free Bareiss elimination.
pub fn hankel_determinant(values: &[BigInt], m: usize) -> Result<BigInt> {
    if 2 * m >= values.len() {
        return param(format!("Hankel order {m} needs {} moments", 2 * m + 1));
    }
    let size = m + 1;
    let mut a: Vec<Vec<BigInt>> = (0..size)
        .map(|i| (0..size).map(|j| values[i + j].clone()).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size - 1 {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[m][m])
}

/// `C_{2n} = a_n^{(Q)} / (6n 4^n)` for N = 1 and `n = 1..=count`.
pub fn phi3_symmetry_numbers(count: usize) -> Result<Vec<BigRational>> {
    if count == 0 {
        return param("phi3 count must be at least 1");
    }
    let moments = moments_from_sfraction(FamilySpec::new(Family::OddQ, 1)?, count + 1)?;
    Ok((1..=count)
        .map(|n| {
            let den = BigInt::from(6 * n as u64) * BigInt::from(4).pow(n as u32);
            BigRational::new(moments.values()[n].clone(), den)
        })
        .collect())
}
