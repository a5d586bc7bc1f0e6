//! Integer polynomial families `p_n, q_n` (even N) and `P_n, Q_n` (odd N).
//!
//! Everything here is exact: coefficients are [`num_bigint::BigInt`] and
//! identities are checked by polynomial arithmetic, not by sampling.

mod exact;
mod family;
mod golden;
mod identities;
mod moments;
mod recurrence;

pub use exact::ExactPoly;
pub(crate) use exact::big_to_f64;
pub use family::{Family, FamilySpec};
pub use golden::{golden_mismatches, golden_table};
pub use identities::{
    check_diff_relation, check_hermite, check_ode_identity, diff_relation_residual, hermite,
    ode_residual,
};
pub use moments::{
    check_contraction, contraction, hankel_determinant, moment_functional, moments_from_sfraction,
    norm_exact, phi3_symmetry_numbers, sfraction_coeffs, MomentSequence,
};
pub use recurrence::{evaluate_f64, polynomial, polynomials, recurrence_coeffs, step_coeffs, RecurrenceCoeffs};
