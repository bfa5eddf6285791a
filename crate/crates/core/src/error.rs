use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("words are over different alphabets")]
    MixedAlphabets,
    #[error("symbol {symbol:?} at offset {offset} is not in the alphabet")]
    UnknownSymbol { symbol: char, offset: usize },
    #[error("alphabet lists symbol {0:?} more than once")]
    DuplicateSymbol(char),
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet has {0} symbols, at most 256 are supported")]
    AlphabetTooLarge(usize),
    #[error("word of length {len} exceeds the limit of {limit}")]
    TooLong { len: usize, limit: usize },
    #[error("morphism is not prolongable on a")]
    NotProlongable,
    #[error("fixed point has shape {found}, expected {expected}")]
    ShapeMismatch { expected: String, found: String },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
