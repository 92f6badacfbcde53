use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("p must be at least 7, got {0}")]
    InvalidP(usize),
    #[error("{0} has no father inside its sector")]
    NoFather(String),
    #[error("{cell} lies outside the ball of radius {radius}")]
    OutsideBall { cell: String, radius: usize },
    #[error("bad cell coordinate: {0}")]
    BadCoord(String),
}
