use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Polynomial in one variable with arbitrary-precision integer coefficients.
///
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient list and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExactPoly {
    coeffs: Vec<BigInt>,
}

impl ExactPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    /// `z + c`.
    pub fn linear(c: BigInt) -> Self {
        Self::from_coeffs(vec![c, BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Multiply by `z`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitute `z -> c * z^k`.
    pub fn substitute_monomial(&self, c: &BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        let mut pow = BigInt::one();
        for (j, a) in self.coeffs.iter().enumerate() {
            coeffs[j * k] = a * &pow;
            pow *= c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, z: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * z + big_to_f64(c))
    }

    /// First nonzero coefficient, used to report residual failures.
    pub fn first_nonzero(&self) -> Option<(usize, &BigInt)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for ExactPoly {
    /// Descending powers in `z`, e.g. `z^2-28z+84`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            write!(f, "{sign}")?;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "z")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl Serialize for ExactPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPoly::from_coeffs(out)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactPoly {
            type Output = ExactPoly;
            fn $m(self, rhs: ExactPoly) -> ExactPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
