use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("{d} does not divide {what}")]
    NotADivisor { d: u64, what: String },

    #[error("index {index} out of range {range}")]
    OutOfRange { index: u64, range: String },

    #[error("monomial {0} is not invariant under the stabilizer subgroup")]
    NotInvariant(String),

    #[error("malformed input `{token}`: {reason}")]
    Parse { token: String, reason: String },

    /// Two independent computations of the same quantity disagreed.
    #[error("internal identity mismatch in {context}: {left} != {right}")]
    IdentityMismatch {
        context: String,
        left: String,
        right: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
