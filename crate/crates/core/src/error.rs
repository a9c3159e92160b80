use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty set")]
    EmptySet,
    #[error("unreachable set: no connected subgraph spans the requested vertices")]
    UnreachableSet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid Prüfer sequence: {0}")]
    InvalidPrufer(String),
    #[error("need at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("invalid order k = {0} (need k >= 2)")]
    InvalidOrder(usize),
    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),
    #[error("profile length mismatch: expected {expected}, found {found}")]
    ProfileLength { expected: usize, found: usize },
    #[error("hypermatrix has negative entries")]
    NegativeEntry,
    #[error("no convergence after {iterations} iterations; last enclosure [{lo}, {hi}]")]
    NonConvergence { iterations: usize, lo: f64, hi: f64 },
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
