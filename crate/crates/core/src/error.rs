use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    Loop(usize),
    #[error("vertex id {id} out of range 1..={n}")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("not a permutation of 1..={0}")]
    NotPermutation(usize),
    #[error("{what}: {size} exceeds cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("vertex {0} is not eligible to fire")]
    Ineligible(usize),
    #[error("trace did not clean the graph")]
    NotCleaned,
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
