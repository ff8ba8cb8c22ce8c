//! Error taxonomy shared across the crate.

use thiserror::Error;

/// Failures raised by evaluators, samplers, and oracles.
///
/// Domain errors name the violated bound so callers (and the CLI) can report
/// exactly which precondition failed. Numerical failures are split into
/// non-convergence (a term budget was exhausted) and cancellation (the series
/// lost more digits than the policy allows) because they call for different
/// remedies.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A parameter or argument is outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series evaluation hit its `max_terms` budget before converging.
    #[error("series did not converge within {max_terms} terms (last term {last_term:e})")]
    NonConvergence { max_terms: usize, last_term: f64 },

    /// The running cancellation ratio exceeded the policy's `cancel_guard`
    /// and no alternative evaluation branch was available.
    #[error("cancellation guard tripped: ratio {ratio:e} exceeds guard {guard:e}")]
    Cancellation { ratio: f64, guard: f64 },

    /// Adaptive quadrature failed to reach its error target.
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    /// A result does not fit in an `f64` even after log-space evaluation.
    #[error("overflow: {0}")]
    Overflow(String),

    /// A supposed CDF decreased on the sample points handed to a KS test.
    #[error("cdf is not monotone at sample point {at} (drop {drop:e})")]
    NonMonotoneCdf { at: f64, drop: f64 },

    /// A batch or report failed its structural validity checks.
    #[error("invalid data: {0}")]
    InvalidData(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
