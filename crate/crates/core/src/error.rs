use thiserror::Error;

/// Errors raised by the algebra, construction and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DzError {
    #[error("invalid degree: declared {declared} is below actual degree {actual}")]
    InvalidDegree { declared: usize, actual: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series must have constant term 1, found {0}")]
    Normalization(String),
    #[error("series of order {have} is too short, order {need} required")]
    Order { have: usize, need: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("printed formula does not verify: {0}")]
    Erratum(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, DzError>;
