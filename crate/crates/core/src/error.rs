use crate::bitset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("graph6 short form holds at most 62 vertices, got {n}")]
    Graph6Size { n: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{n} vertices exceeds the vertex cap of {cap}")]
    VertexCap { n: usize, cap: usize },

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },

    #[error("vertex {vertex} is outside the ground set of size {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("antichain violation: edge {contained} {contained_set} is a subset of edge {container} {container_set}")]
    Antichain { contained: usize, container: usize, contained_set: VertexSet, container_set: VertexSet },

    #[error("duplicate edge {set} at positions {first} and {second}")]
    DuplicateEdge { first: usize, second: usize, set: VertexSet },

    #[error("enumeration cap of {cap} exceeded ({found} found before stopping)")]
    EnumerationCap { cap: usize, found: usize },

    #[error("set {set} is not independent: {u} and {v} are adjacent")]
    NotIndependent { set: VertexSet, u: usize, v: usize },

    #[error("{set} is not a maximal independent set")]
    NotMaximalIndependent { set: VertexSet },

    #[error("subset {subset} is not contained in edge {edge}")]
    NotSubset { subset: VertexSet, edge: VertexSet },

    #[error("edge index {index} out of range ({count} edges)")]
    EdgeIndex { index: usize, count: usize },

    #[error("the clutter has no edges")]
    EmptyClutter,

    #[error("the graph has no edges")]
    Edgeless,

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("vertex {0} is not a leaf")]
    NotALeaf(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("certificate failure: {0}")]
    CertificateFailure(String),

    #[error("invalid set cover instance: {0}")]
    InvalidInstance(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("too large for exact verification: {0}")]
    TooLarge(String),

    #[error("stage `{stage}` failed: {source}")]
    Stage { stage: &'static str, source: Box<Error> },

    #[error("time limit exceeded")]
    TimeLimit,
}

impl Error {
    pub(crate) fn in_stage(self, stage: &'static str) -> Error {
        Error::Stage { stage, source: Box::new(self) }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
