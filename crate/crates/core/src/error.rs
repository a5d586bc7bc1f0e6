use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("evaluation did not converge: {what} (partial value {partial:e}, achieved error {bound:e})")]
    Evaluation {
        what: String,
        partial: f64,
        bound: f64,
    },

    #[error("{identity} residual is nonzero at n={degree}: coefficient {coeff}")]
    NonzeroResidual {
        identity: &'static str,
        degree: usize,
        coeff: String,
    },

    #[error("no sign change of the matching defect in [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },

    #[error("integration step failure at x={x}: {reason}")]
    Step { x: f64, reason: String },

    #[error("overlapping brackets near E={0}")]
    OverlappingBrackets(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
