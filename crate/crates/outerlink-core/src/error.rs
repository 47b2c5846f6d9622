use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown graph name `{0}`")]
    UnknownGraphName(String),

    #[error("graph construction: {0}")]
    InvalidGraph(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {u}-{v} is not present")]
    MissingEdge { u: usize, v: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid neighbor partition at vertex {vertex}: {reason}")]
    InvalidPartition { vertex: usize, reason: String },

    #[error("{operation} supports at most {bound} vertices, got {actual}")]
    SizeBound {
        operation: &'static str,
        bound: usize,
        actual: usize,
    },

    #[error("invalid cyclic order: {0}")]
    InvalidOrder(String),

    #[error("invalid link: {0}")]
    InvalidLink(String),

    #[error("no crossing with id {0}")]
    UnknownCrossing(usize),

    #[error("graph is not outerplanar")]
    NotOuterplanar,

    #[error("{operation} expects {expected}")]
    UnsupportedGraph {
        operation: &'static str,
        expected: &'static str,
    },

    #[error("diagram text, line {line}: {reason}")]
    DiagramParse { line: usize, reason: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("cycle/cycle crossing parity is asymmetric; diagram is not realizable")]
    AsymmetricCrossings,

    #[error("classification routes disagree: {0}")]
    CrossValidationMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
