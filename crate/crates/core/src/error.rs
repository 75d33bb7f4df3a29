use std::fmt;

use thiserror::Error;

/// A syntax error in one of the textual formats, with a byte offset
/// (or a 1-based line number for line-oriented files).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("automaton file, line {line}: {message}")]
    AutomatonFormat { line: usize, message: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not superatomic: {0}")]
    NotSuperatomic(String),
    #[error("not compilable to a finite automaton: subterm `{0}` has a limit-ordinal rank")]
    NotCompilable(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
