use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("graph is not triangulated")]
    NotTriangulated,
    #[error("need at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("edge ({0}, {1}) is not on the outer face")]
    NotOuterEdge(usize, usize),
    #[error("edge ({0}, {1}) does not exist")]
    MissingEdge(usize, usize),
    #[error("triangle {0:?} is not separating")]
    NotSeparating([usize; 3]),
    #[error("separating triangle {0:?} does not contain the prescribed edge")]
    StraySeparatingTriangle([usize; 3]),
    #[error("invalid edge set: {0}")]
    InvalidEdgeSet(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no construction found: {0}")]
    ConstructionNotFound(String),
    #[error("multiplier {got} is below the required {min}")]
    ThresholdTooSmall { got: i64, min: i64 },
    #[error("{check} check failed: {detail}")]
    CheckFailed { check: String, detail: String },
}
