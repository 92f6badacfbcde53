use hypca_rulecore::RuleError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("no rule set for p={0}")]
    UnsupportedP(usize),

    #[error("expected a table for p={expected}, found p={found}")]
    WrongP { expected: usize, found: usize },

    #[error("unknown cell kind {0:?}")]
    UnknownKind(String),

    #[error("line {line}: {msg}")]
    BadData { line: usize, msg: String },

    #[error(transparent)]
    Rule(#[from] RuleError),
}
