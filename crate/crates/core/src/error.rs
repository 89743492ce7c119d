use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A property that must hold for valid inputs failed. Seeing this means a
    /// bug in the library or in the transcribed data.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    /// Squarefreeness could not be decided within the trial-division bound.
    #[error("undecided: {0}")]
    Undecided(String),

    /// The parameter is admissible but the field was not certified, so index
    /// computations against the basis are meaningless.
    #[error("refused: {0}")]
    Refused(String),

    #[error("work limit exceeded: {requested} candidates requested, limit is {limit}")]
    WorkLimit { requested: u128, limit: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
