//! Exact polynomial families, special functions and spectra for the
//! eigenvalue problem `-y'' + x^(2N+2) y = E x^N y` on the real line.
//!
//! * [`poly`]: the integer polynomial families, their recurrences, moments
//!   and continued fractions, all in exact arithmetic.
//! * [`specfun`]: floating-point special functions (confluent
//!   hypergeometric, Bessel K, generalized Airy, Bateman).
//! * [`spectra`]: closed-form eigenvalues and eigenfunctions.
//! * [`oracle`]: independent numerical checks (shooting, quadrature).

pub mod error;
pub mod oracle;
pub mod poly;
pub mod quad;
pub mod specfun;
pub mod spectra;

pub use error::{Error, Result};
