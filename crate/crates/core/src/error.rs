use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("polynomials live over different generator tables")]
    TableMismatch,

    #[error("denominator has no unit lowest v-term: {0}")]
    NotExpandable(String),

    #[error("series truncations differ: vmax {left} vs {right}")]
    TruncationMismatch { left: i64, right: i64 },

    #[error("cannot truncate a series known to v^{have} at v^{want}")]
    TruncationTooHigh { have: i64, want: i64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("nonzero remainder in exact division by {0}")]
    NonzeroRemainder(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("non-triangular elimination: {0}")]
    NonTriangular(String),

    #[error("check `{check}` failed: {witness}")]
    CheckFailed { check: String, witness: String },
}

impl Error {
    pub(crate) fn check(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::CheckFailed { check: check.into(), witness: witness.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
