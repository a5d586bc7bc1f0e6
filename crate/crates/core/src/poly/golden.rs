//! Reference low-degree tables, written in descending powers.

use super::{polynomials, Family, FamilySpec};

const EVEN_P_2: [&str; 5] = [
    "1",
    "z-6",
    "z^2-28z+84",
    "z^3-66z^2+924z-1848",
    "z^4-120z^3+3960z^2-36960z+55440",
];
const EVEN_Q_2: [&str; 5] = [
    "1",
    "z-10",
    "z^2-36z+180",
    "z^3-78z^2+1404z-4680",
    "z^4-136z^3+5304z^2-63648z+159120",
];
const ODD_P_M1: [&str; 6] = [
    "1",
    "z+3",
    "z^2+9z+15",
    "z^3+19z^2+90z+105",
    "z^4+33z^3+321z^2+1050z+945",
    "z^5+51z^4+852z^3+5631z^2+14175z+10395",
];
const ODD_Q_M1: [&str; 6] = [
    "1",
    "z+1",
    "z^2+7z+3",
    "z^3+17z^2+58z+15",
    "z^4+31z^3+261z^2+582z+105",
    "z^5+49z^4+756z^3+4209z^2+6927z+945",
];
const ODD_P_1: [&str; 5] = [
    "1",
    "z+7",
    "z^2+25z+91",
    "z^3+55z^2+698z+1729",
    "z^4+97z^3+2685z^2+22970z+43225",
];
const ODD_Q_1: [&str; 5] = [
    "1",
    "z+5",
    "z^2+23z+55",
    "z^3+53z^2+602z+935",
    "z^4+95z^3+2505z^2+18790z+21505",
];

/// The published table for `spec`, if one exists (`N = 2` even families,
/// `N = -1` and `N = 1` odd families).
pub fn golden_table(spec: FamilySpec) -> Option<&'static [&'static str]> {
    match (spec.family(), spec.exponent()) {
        (Family::EvenP, 2) => Some(&EVEN_P_2),
        (Family::EvenQ, 2) => Some(&EVEN_Q_2),
        (Family::OddP, -1) => Some(&ODD_P_M1),
        (Family::OddQ, -1) => Some(&ODD_Q_M1),
        (Family::OddP, 1) => Some(&ODD_P_1),
        (Family::OddQ, 1) => Some(&ODD_Q_1),
        _ => None,
    }
}

/// Indices where the generated polynomials differ from the table.
pub fn golden_mismatches(spec: FamilySpec) -> Option<Vec<usize>> {
    let table = golden_table(spec)?;
    let polys = polynomials(spec, table.len() - 1);
    Some((0..table.len()).filter(|&i| polys[i].to_string() != table[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_tables_match() {
        let mut seen = 0;
        for n in -1..=5 {
            for fam in Family::ALL {
                let Ok(spec) = FamilySpec::new(fam, n) else { continue };
                if let Some(bad) = golden_mismatches(spec) {
                    assert!(bad.is_empty(), "{fam} N={n}: {bad:?}");
                    seen += 1;
                }
            }
        }
        assert_eq!(seen, 6);
    }
}
