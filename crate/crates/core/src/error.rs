use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("malformed matrix: {0}")]
    Matrix(#[from] MatrixParseError),

    #[error("malformed hieroglyph: {0}")]
    Hieroglyph(#[from] HieroglyphError),

    #[error("oracle refuses n = {n}: exhaustive search is limited to n <= {max}")]
    OracleGuard { n: usize, max: usize },

    #[error("operation requires a non-empty matrix")]
    EmptyMatrix,

    #[error("invalid density {0:?}: expected a value in [0, 1]")]
    InvalidDensity(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line} has {found} characters, expected {expected}")]
    Ragged {
        line: usize,
        found: usize,
        expected: usize,
    },
    #[error("illegal character {ch:?} at line {line}, column {column}")]
    IllegalChar {
        ch: char,
        line: usize,
        column: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HieroglyphError {
    #[error("empty input")]
    Empty,
    #[error("empty token at position {0}")]
    EmptyToken(usize),
    /// Also covers odd-length words: some token must then occur an odd number of times.
    #[error("token {token:?} occurs {count} times, expected exactly 2")]
    Multiplicity { token: String, count: usize },
}
