pub mod eigenfunction;
pub mod moments;
pub mod poly;
pub mod spectrum;
pub mod verify;

use specpoly::poly::{Family, FamilySpec};

use crate::error::{usage, CliResult};

pub fn family_spec(family: &str, exponent: i64) -> CliResult<FamilySpec> {
    let fam: Family = match family.parse() {
        Ok(f) => f,
        Err(_) => return usage(format!("unknown family {family:?}; use p, q, P or Q")),
    };
    FamilySpec::new(fam, exponent).or_else(|e| usage(e.to_string()))
}

/// Inclusive integer range `a..b` (also accepts `a..=b`).
pub fn parse_range(s: &str) -> CliResult<(i64, i64)> {
    let Some((a, b)) = s.split_once("..") else {
        return usage(format!("range {s:?} must look like a..b"));
    };
    let b = b.strip_prefix('=').unwrap_or(b);
    match (a.trim().parse(), b.trim().parse()) {
        (Ok(a), Ok(b)) => Ok((a, b)),
        _ => usage(format!("range {s:?} must have integer ends")),
    }
}
