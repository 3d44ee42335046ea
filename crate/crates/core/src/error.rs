use thiserror::Error;

/// Errors raised by the automata substrate and the operations built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must not be empty")]
    EmptyAlphabet,
    #[error("character {0:?} is reserved and cannot be used as a letter")]
    ReservedLetter(char),
    #[error("letter {0:?} is not in the alphabet")]
    ForeignLetter(char),
    #[error("alphabets differ: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },
    #[error("cannot narrow alphabet {from} to {to}")]
    ShrinkingAlphabet { from: String, to: String },
    #[error("automaton is not minimal: {0}")]
    NotMinimal(&'static str),
    #[error("state {state} out of range for {states} states")]
    StateOutOfRange { state: usize, states: usize },
    #[error("transition table has {got} entries, expected {expected}")]
    TableSize { got: usize, expected: usize },
    #[error("epsilon transitions are not enabled on this automaton")]
    EpsilonNotAllowed,
    #[error("language is not over a one-letter alphabet")]
    NotUnary,
    #[error("language is not closed")]
    NotClosed,
    #[error(transparent)]
    Regex(#[from] RegexError),
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// A regex syntax error; `position` counts characters from the start of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("regex error at position {position}: {message}")]
pub struct RegexError {
    pub position: usize,
    pub message: String,
}

/// An automaton file error; `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
