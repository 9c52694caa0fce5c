use thiserror::Error;

use crate::framework::Extension;
use crate::semantics::Semantics;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument name {0:?}: expected a non-empty [A-Za-z0-9_]+ token")]
    InvalidArgumentName(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: attack references undeclared argument {name:?}")]
    UndeclaredArgument { name: String, line: usize },

    #[error("unknown argument {0:?}")]
    UnknownArgument(String),

    #[error("extension {{{0}}} is not conflict-free")]
    NotConflictFree(Extension),

    #[error("semantics {0} is not supported here (expected grounded, preferred or stable)")]
    UnsupportedSemantics(Semantics),

    #[error("invalid preference {0:?}")]
    InvalidPreference(String),

    #[error("reflexive preference between {0:?} and itself")]
    ReflexivePreference(String),

    #[error("preference collection would hold {count} sets, above the cap of {cap}")]
    CollectionTooLarge { count: String, cap: u64 },

    #[error("framework has {size} arguments, above the oracle bound of {bound}")]
    OracleBound { size: usize, bound: usize },

    #[error("no framework satisfying the {semantics} requirement found in {attempts} attempts")]
    BudgetExhausted { semantics: Semantics, attempts: usize },

    #[error("time budget of {budget_ms} ms exceeded")]
    DeadlineExceeded { budget_ms: u64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("malformed preference document: {0}")]
    MalformedDocument(String),
}

impl Error {
    /// True for errors caused by unreadable input text, as opposed to
    /// well-formed input that violates a semantic precondition.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidArgumentName(_)
                | Error::Syntax { .. }
                | Error::UndeclaredArgument { .. }
                | Error::InvalidPreference(_)
                | Error::ReflexivePreference(_)
                | Error::MalformedDocument(_)
        )
    }
}
