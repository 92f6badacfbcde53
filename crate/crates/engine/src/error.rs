use hypca_rulecore::{RuleError, State};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("t={time}: cell {cell}: no rule for {current} with neighbourhood {key}")]
    MissingRule { cell: String, time: usize, current: State, key: String },

    #[error("unknown cell {0:?}")]
    UnknownCell(String),

    #[error("duplicate cell {0:?}")]
    DuplicateCell(String),

    #[error("cell {cell} refers to missing cell {target}")]
    DanglingRef { cell: String, target: String },

    #[error("cell {cell} has {found} neighbour slots, expected {expected}")]
    WrongArity { cell: String, expected: usize, found: usize },

    #[error("{from} refers to {to} but {to} does not refer back (declare a stub if intended)")]
    Asymmetric { from: String, to: String },

    #[error("trace columns differ: {actual:?} vs {expected:?}")]
    ColumnMismatch { actual: Vec<String>, expected: Vec<String> },

    #[error("trace line {line}: {msg}")]
    BadTrace { line: usize, msg: String },

    #[error("a black state would leave the ball interior at {0}")]
    SupportEscape(String),

    #[error("region cannot be embedded in the tiling: {0}")]
    NotEmbeddable(String),

    #[error(transparent)]
    Rule(#[from] RuleError),
}
