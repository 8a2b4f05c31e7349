use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },

    #[error("alphabet {target} does not contain {source_alphabet}")]
    NotSuperset {
        source_alphabet: String,
        target: String,
    },

    #[error("letter {0} is not in the alphabet")]
    LetterOutsideAlphabet(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid word {text:?}: {msg}")]
    WordSyntax { text: String, msg: String },

    #[error("SRE syntax error at byte {pos}: {msg}")]
    SreSyntax { pos: usize, msg: String },

    #[error("automaton format error on line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("language is not upward closed")]
    NotUpwardClosed,

    #[error("language is not downward closed")]
    NotDownwardClosed,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no factorization P.rho(Q) for residual by {word:?}")]
    NoFactorization { word: String },

    #[error("dividing set verification failed at F_{0}")]
    DividingSetFailed(usize),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
