use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("invalid symbol name `{0}`")]
    InvalidSymbol(String),

    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),

    #[error("operation `{0}` is not defined for expressions using negation or intersection")]
    ExtendedOperator(&'static str),

    #[error("{what} exceeded the budget of {limit}")]
    BudgetExceeded { what: &'static str, limit: usize },

    #[error("cancelled")]
    Cancelled,

    #[error("alphabets differ")]
    AlphabetMismatch,

    #[error("automaton is not deterministic")]
    NotDeterministic,

    #[error("expression is not one-unambiguous")]
    NotOneUnambiguous,

    #[error("expression {0} is not a single-occurrence regular expression")]
    NotSore(String),

    #[error("unknown marked symbol `{0}`")]
    UnknownMarkedSymbol(String),

    #[error("value out of range: {0}")]
    Range(String),

    #[error("path has an odd number of edges ({0})")]
    OddLength(usize),

    #[error("wrong alphabet: {0}")]
    WrongAlphabet(String),

    #[error("malformed automaton file, line {line}: {message}")]
    Format { line: usize, message: String },
}

impl Error {
    pub fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            message: message.into(),
        }
    }

    /// True for the resource-limit family (budget or cancellation).
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::Cancelled)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
