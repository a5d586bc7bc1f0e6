use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};

/// The four integer polynomial families.
///
/// `EvenP`/`EvenQ` (written p, q) belong to even exponents N, `OddP`/`OddQ`
/// (written P, Q) to odd exponents N.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    EvenP,
    EvenQ,
    OddP,
    OddQ,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::EvenP, Family::EvenQ, Family::OddP, Family::OddQ];

    pub fn is_even(self) -> bool {
        matches!(self, Family::EvenP | Family::EvenQ)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Family::EvenP => "p",
            Family::EvenQ => "q",
            Family::OddP => "P",
            Family::OddQ => "Q",
        }
    }

    /// The families allowed for a given exponent.
    pub fn for_exponent(n: i64) -> [Family; 2] {
        if n.rem_euclid(2) == 0 {
            [Family::EvenP, Family::EvenQ]
        } else {
            [Family::OddP, Family::OddQ]
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts the single-letter symbols (case-sensitive) or the variant names.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" | "EvenP" => Ok(Family::EvenP),
            "q" | "EvenQ" => Ok(Family::EvenQ),
            "P" | "OddP" => Ok(Family::OddP),
            "Q" | "OddQ" => Ok(Family::OddQ),
            _ => param(format!("unknown family '{s}' (expected p, q, P or Q)")),
        }
    }
}

/// A family together with its exponent N; parity is checked on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    family: Family,
    exponent: i64,
}

impl FamilySpec {
    pub fn new(family: Family, exponent: i64) -> Result<Self> {
        if exponent < -1 {
            return param(format!("exponent N={exponent} must be >= -1"));
        }
        if family.is_even() != (exponent.rem_euclid(2) == 0) {
            return param(format!("family {family} does not match the parity of N={exponent}"));
        }
        Ok(Self { family, exponent })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn exponent(self) -> i64 {
        self.exponent
    }

    /// `2(N+2)`, the spacing that appears in every recurrence coefficient.
    pub fn lambda(self) -> i64 {
        2 * (self.exponent + 2)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[N={}]", self.family, self.exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_is_enforced() {
        assert!(FamilySpec::new(Family::EvenP, 2).is_ok());
        assert!(FamilySpec::new(Family::OddQ, -1).is_ok());
        assert!(FamilySpec::new(Family::EvenQ, 1).is_err());
        assert!(FamilySpec::new(Family::OddP, 0).is_err());
        assert!(FamilySpec::new(Family::OddP, -3).is_err());
    }

    #[test]
    fn symbols_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.symbol().parse::<Family>().unwrap(), f);
        }
        assert!("x".parse::<Family>().is_err());
    }
}
