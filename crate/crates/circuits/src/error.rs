use hypca_engine::EngineError;
use hypca_genrules::GenError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("no circuit layouts for p={0}")]
    UnsupportedP(usize),

    #[error("line {line}: {msg}")]
    SyntaxError { line: usize, msg: String },

    #[error("unknown cell {0:?}")]
    UnknownRole(String),

    #[error("cell {cell} refers to missing cell {target}")]
    DanglingRef { cell: String, target: String },

    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),

    #[error("cell {cell}: {msg}")]
    BadLayout { cell: String, msg: String },

    #[error(transparent)]
    Engine(#[from] EngineError),

    #[error(transparent)]
    Gen(#[from] GenError),
}
