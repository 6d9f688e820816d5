use thiserror::Error;

/// Errors raised by the analysis pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// The generator set violates a structural requirement.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// A point was handed to a slice that does not contain it.
    #[error("point {point:?} lies outside {slice}")]
    OutOfDomain { point: Vec<i64>, slice: String },

    /// A simplex slice would exceed the configured size cap.
    #[error("resource limit: slice with {requested} points exceeds the cap of {cap}")]
    ResourceLimit { requested: u128, cap: u64 },

    /// The operation is only defined for smooth or one-singular instances.
    #[error("unsupported instance: {0}")]
    Unsupported(String),

    /// An operation was called outside its contract.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A proven relation failed on a concrete instance.
    #[error("contradiction with a proven bound: {0}")]
    Contradiction(String),

    /// Two independent routes to the same answer disagree.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit status for the command-line tool: `1` for bad input or
    /// I/O, `2` for unsupported instances, `3` for the slice cap, `4` when a
    /// proven relation or an internal cross-check fails.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInstance(_)
            | Error::OutOfDomain { .. }
            | Error::Parameter(_)
            | Error::Io(_)
            | Error::Json(_) => 1,
            Error::Unsupported(_) | Error::Precondition(_) => 2,
            Error::ResourceLimit { .. } => 3,
            Error::Contradiction(_) | Error::Internal(_) => 4,
        }
    }
}
