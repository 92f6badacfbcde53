use thiserror::Error;

use crate::State;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("line {line}: syntax error: {msg}")]
    SyntaxError { line: usize, msg: String },

    #[error("line {line}: context has {found} symbols, expected {expected}")]
    LengthError { line: usize, expected: usize, found: usize },

    #[error("CONFLICT {current} {key} : {existing} vs {incoming} ({existing_source}, {incoming_source})")]
    Conflict {
        current: State,
        key: String,
        existing: State,
        incoming: State,
        existing_source: String,
        incoming_source: String,
    },

    #[error("no rule for {current} with neighbourhood {key}")]
    MissingRule { current: State, key: String },
}
