use thiserror::Error;

/// Errors produced by scenario construction, channel sampling, and the
/// closed-form / Monte Carlo evaluators.
#[derive(Debug, Error)]
pub enum Error {
    /// Matrix or vector dimensions do not agree.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A matrix violates the Hermitian symmetry tolerance.
    #[error("matrix is not Hermitian: {0}")]
    NotHermitian(String),

    /// A matrix has an eigenvalue below the positive semi-definite slack.
    #[error("matrix is not positive semi-definite: {0}")]
    NotPsd(String),

    /// A parameter is outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The scenario is degenerate (dead links, zero distances, zero moments).
    #[error("degenerate scenario: {0}")]
    Degenerate(String),

    /// A configuration file failed to parse or validate.
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
