//! Crate-wide error type. Domain failures (non-stationarity, overflow,
//! insufficient truncation) are separated from invalid input so the CLI
//! can map them to distinct exit codes.

/// Errors produced by construction and computation routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Parameter validation failed (non-finite value, empty input, bad flag combination).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Exact integer computation exceeded the widest available integer width.
    #[error("integer overflow: {0} exceeds the exact 128-bit integer range")]
    Overflow(String),

    /// An operation that requires a stationary model was given parameters
    /// whose characteristic roots do not all lie inside the unit circle.
    #[error(
        "non-stationary parameters phi1={phi1}, phi2={phi2}: max root modulus {rho} >= 1, \
         no square-summable linear-process representation exists"
    )]
    NonStationary { phi1: f64, phi2: f64, rho: f64 },

    /// The truncation order needed to meet the requested tolerance exceeds the cap.
    /// Happens when the stationarity margin is tiny and the geometric envelope decays
    /// too slowly.
    #[error(
        "truncation order exceeds cap {cap} for tolerance {tol:e} \
         (stationarity margin {margin:e}); refusing to loop"
    )]
    TruncationTooLarge { cap: usize, tol: f64, margin: f64 },

    /// The impulse response is too short (or its tail too heavy) for the requested
    /// autocovariance computation.
    #[error(
        "impulse response of order {order} cannot support lags up to {maxlag} at the \
         required accuracy; rebuild it with order >= {required_order}"
    )]
    InsufficientTruncation {
        order: usize,
        maxlag: usize,
        required_order: usize,
    },

    /// Mismatched inputs (e.g. an impulse response built for different parameters,
    /// or a moving-average window longer than the supplied noise).
    #[error("mismatched inputs: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn mismatch(msg: impl Into<String>) -> Self {
        Error::Mismatch(msg.into())
    }

    /// True for errors caused by a mathematically out-of-domain request rather
    /// than malformed input.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::NonStationary { .. }
                | Error::TruncationTooLarge { .. }
                | Error::InsufficientTruncation { .. }
                | Error::Overflow(..)
                | Error::Mismatch(..)
        )
    }
}
