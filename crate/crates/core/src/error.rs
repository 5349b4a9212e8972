use thiserror::Error;

use crate::arith::RationalInterval;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("could not parse {input:?} as a rational number: {reason}")]
    Parse { input: String, reason: String },

    /// The term budget ran out before the requested width was reached.
    /// `achieved` is the best rigorous enclosure available at that point,
    /// if the tail could already be bounded.
    #[error("precision exhausted after {terms} terms")]
    PrecisionExhausted {
        terms: usize,
        achieved: Option<Box<RationalInterval>>,
    },

    /// A mathematical identity the construction relies on failed at runtime.
    /// This always indicates a bug.
    #[error("internal invariant violated at n = {n}: {detail}")]
    InvariantViolation { n: u64, detail: String },

    #[error("no witness found for n <= {n_max}")]
    WitnessNotFound { n_max: u64 },

    #[error("estimation failed: {0}")]
    Estimation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
