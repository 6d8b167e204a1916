use thiserror::Error;

/// Errors produced anywhere in the field, code and codec layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("discrete logarithm of zero is undefined")]
    LogOfZero,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("elements are not linearly independent over the base field")]
    NotABasis,

    #[error("no self-complementary normal basis found")]
    NotFound,

    #[error("code is not LCD: G*G^T is singular")]
    NotLcd,

    #[error("enumeration of {size} items exceeds the configured bound {bound}")]
    TooLarge { size: u128, bound: u64 },

    #[error("no codeword within rank distance {t_max} of the received word")]
    Undecodable { t_max: usize },

    #[error("decoding radius {t_max} exceeds the unique-decoding radius {radius}")]
    RadiusTooLarge { t_max: usize, radius: usize },

    #[error("vector is not a codeword")]
    NotInCode,

    #[error("segment {index} has length {len}, expected 1..={n}")]
    BadSegmentLength { index: usize, len: usize, n: usize },

    #[error("coordinate {coordinate} identified as length {length} but the child code rejects it")]
    IdentificationFailure { coordinate: usize, length: usize },

    #[error("invalid pad table: {0}")]
    BadPadTable(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid code parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// Re-anchors a parse error produced on a single line to the given line number.
    pub fn at_line(self, line: usize) -> Self {
        match self {
            Error::Parse {
                column, message, ..
            } => Error::Parse {
                line,
                column,
                message,
            },
            other => other,
        }
    }
}
