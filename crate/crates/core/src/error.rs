use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cap `{name}` exceeded: limit {limit}, got {actual}")]
    CapExceeded {
        name: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("not an embedding: {0}")]
    InvalidEmbedding(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("constraint violated: host contains constraint #{0}")]
    ConstraintViolated(usize),
    #[error("constraint #{0} is not solid")]
    NotSolid(usize),
    #[error("constraint #{0} is not connected")]
    DisconnectedConstraint(usize),
    #[error("constraint set is empty")]
    EmptyConstraintSet,
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph spec error: {0}")]
    Spec(String),
}
