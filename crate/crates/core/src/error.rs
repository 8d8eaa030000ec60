use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("loop edge {0}-{0} is not allowed")]
    LoopEdge(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph must be connected for this operation")]
    Disconnected,

    #[error("{what} exceeds the supported limit of {limit}")]
    TooLarge { what: String, limit: usize },

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("the given set is not a connected dominating set")]
    NotConnectedDominating,

    #[error("the given certificate is not a connected 2-dominating set")]
    NotConnected2Dominating,

    #[error("minimum degree {found} below required {required}")]
    MinDegreeTooSmall { required: usize, found: usize },

    #[error("augmentation stuck at vertex {vertex}: {msg}")]
    AugmentationStuck { vertex: usize, msg: String },

    #[error("base coloring does not match the induced subgraph ({expected} edges expected, {found} given)")]
    BaseColoringMismatch { expected: usize, found: usize },

    #[error("constructed coloring failed verification on vertex set {0:?}")]
    VerificationFailed(Vec<usize>),

    #[error("block with {edges} edges exceeds the exact search budget of {limit} edges")]
    BlockTooLarge { edges: usize, limit: usize },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("graph is not complete bipartite with both sides of size >= 3")]
    NotCompleteBipartite,
}

pub type Result<T> = std::result::Result<T, Error>;
