use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word length must be at least 1")]
    EmptyWord,

    #[error("word length {len} exceeds the limit of {max}")]
    WordTooLong { len: usize, max: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("a code needs at least one codeword")]
    EmptyCode,

    #[error("invalid character {ch:?} at column {column}; expected '0' or '1'")]
    InvalidBit { ch: char, column: usize },

    #[error("span of dimension {dim} exceeds the enumeration cap of 2^{cap} words")]
    EnumerationCap { dim: usize, cap: usize },

    #[error("minimum distance is undefined for a code with fewer than two codewords")]
    DistanceUndefined,

    #[error("brute-force oracle supports n <= {max}, got n = {n}")]
    OracleCap { n: usize, max: usize },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
