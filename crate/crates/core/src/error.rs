use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("walk type must contain at least one letter")]
    EmptyType,
    #[error("unknown walk-type letter {0:?} (expected one of a, b, c, d, e)")]
    UnknownTypeLetter(char),
    #[error("walk types with more than {max} dimensions are not supported (got {got})")]
    TooManyDimensions { got: usize, max: usize },
    #[error("unrecognized step token at byte offset {offset}")]
    UnknownToken { offset: usize },
    #[error("multinomial parts sum to {sum}, expected {n}")]
    PartsMismatch { n: u64, sum: u64 },
    #[error("{what} is defined for even n only, got {n}")]
    OddLength { what: &'static str, n: u64 },
    #[error("enumeration refused: {candidates} candidate strings exceed the limit of {limit}")]
    BruteForceGuard { candidates: String, limit: u64 },
    #[error("counting refused: memo table grew past {limit} states")]
    StateGuard { limit: usize },
    #[error("invalid Dyck word at position {position}: {reason}")]
    InvalidDyck {
        position: usize,
        reason: &'static str,
    },
    #[error("not a valid walk: {0}")]
    InvalidWalk(String),
    #[error("walk uses dimension {dim}, but the bijection expects a type-ae walk")]
    WrongWalkType { dim: usize },
    #[error("golden data line {line}: {reason}")]
    Golden { line: usize, reason: String },
}
