use thiserror::Error;

use crate::words::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("braid index must be at least 2, got {0}")]
    BadIndex(usize),

    #[error("syntax error in token `{token}`")]
    Syntax { token: String },

    #[error("letter `{token}` is out of range for B_{n}")]
    IndexOutOfRange { token: String, n: usize },

    #[error("cannot combine words in B_{left_n} ({left_p}) and B_{right_n} ({right_p})")]
    Mismatch {
        left_n: usize,
        left_p: Presentation,
        right_n: usize,
        right_p: Presentation,
    },

    #[error("word is in the {found} presentation, expected {expected}")]
    WrongPresentation {
        expected: Presentation,
        found: Presentation,
    },

    #[error("malformed canonical factor `{0}`")]
    BadFactor(String),

    #[error("enumerating canonical factors of B_{n} exceeds the cap of {cap} strands")]
    EnumerationCap { n: usize, cap: usize },

    #[error("super summit set exceeds the cap of {cap} members ({partial} found before aborting)")]
    CapExceeded { cap: usize, partial: usize },
}

impl BraidError {
    /// Errors caused by malformed user input, as opposed to a computation limit.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, BraidError::CapExceeded { .. } | BraidError::EnumerationCap { .. })
    }
}

pub type Result<T, E = BraidError> = std::result::Result<T, E>;
