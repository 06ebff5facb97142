use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot index an empty sequence")]
    EmptySequence,

    #[error("sequence of {len} symbols exceeds the supported maximum of {max}")]
    SequenceTooLong { len: usize, max: usize },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("symbol {symbol:?} at position {position} is not in the alphabet")]
    SymbolNotInAlphabet { symbol: char, position: usize },

    #[error("factor [{start}, {end}] is out of range for a text of length {len}")]
    FactorOutOfRange { start: usize, end: usize, len: usize },

    #[error("node {0} has no suffix link (root or leaf)")]
    NoSuffixLink(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal consistency violated: {0}")]
    Consistency(String),

    #[error("FASTA line {line}: {message}")]
    Fasta { line: usize, message: String },

    #[error("brute-force oracle refused: {0}")]
    OracleGuard(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
