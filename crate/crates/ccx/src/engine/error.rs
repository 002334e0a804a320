//! Error types shared across the engine.

use std::fmt;

/// Classification of engine failures. Every runtime or read error carries
/// exactly one kind, and evaluation outcomes report it verbatim.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ErrorKind {
    /// The source text is not in the supported language.
    Parse,
    /// A builtin needed a bound value and got an unbound variable.
    Instantiation,
    /// A builtin got a value of the wrong shape (e.g. `foo + 1`).
    Type,
    /// A call to a predicate with no clauses and no dynamic declaration.
    Existence,
    /// The step or depth limit was exhausted before an answer was found.
    ResourceLimit,
}

impl ErrorKind {
    /// Stable machine-readable name, used in reports and result files.
    pub fn label(self) -> &'static str {
        match self {
            ErrorKind::Parse => "parse_error",
            ErrorKind::Instantiation => "instantiation_error",
            ErrorKind::Type => "type_error",
            ErrorKind::Existence => "existence_error",
            ErrorKind::ResourceLimit => "resource_limit",
        }
    }

    /// Short kind name, used inside `error(...)` outcome renderings.
    pub fn short(self) -> &'static str {
        match self {
            ErrorKind::Parse => "parse",
            ErrorKind::Instantiation => "instantiation",
            ErrorKind::Type => "type",
            ErrorKind::Existence => "existence",
            ErrorKind::ResourceLimit => "resource_limit",
        }
    }
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A reading error with source position.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub message: String,
    /// When the error is "this is real Prolog but outside the subset",
    /// the offending construct (operator or `name/arity`).
    pub construct: Option<String>,
}

/// A runtime error raised while proving a goal or loading a program.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("{}: {message}", kind.label())]
pub struct EngineError {
    pub kind: ErrorKind,
    pub message: String,
}

impl EngineError {
    pub fn new(kind: ErrorKind, message: impl Into<String>) -> Self {
        EngineError { kind, message: message.into() }
    }

    pub fn instantiation(message: impl Into<String>) -> Self {
        EngineError::new(ErrorKind::Instantiation, message)
    }

    pub fn type_error(message: impl Into<String>) -> Self {
        EngineError::new(ErrorKind::Type, message)
    }

    pub fn existence(message: impl Into<String>) -> Self {
        EngineError::new(ErrorKind::Existence, message)
    }

    pub fn resource(message: impl Into<String>) -> Self {
        EngineError::new(ErrorKind::ResourceLimit, message)
    }
}

impl From<ParseError> for EngineError {
    fn from(e: ParseError) -> Self {
        EngineError::new(ErrorKind::Parse, e.to_string())
    }
}
