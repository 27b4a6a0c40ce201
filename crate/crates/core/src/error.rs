use thiserror::Error;

/// Errors raised by the series kernels, the counters and the suite driver.
#[derive(Debug, Error)]
pub enum Error {
    /// Operands or parameters that do not fit together (mismatched truncation
    /// orders, invalid grids, out-of-range parameters).
    #[error("configuration error: {0}")]
    Config(String),

    /// An operation applied outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A structural property that must hold did not (for example a series
    /// claimed ordinary carries a negative q-exponent).
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// The requested result would need coefficients the operands do not carry.
    #[error("insufficient precision: {0}")]
    Precision(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
