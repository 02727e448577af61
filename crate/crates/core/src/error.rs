use thiserror::Error;

/// Failure while reading one of the text formats (polytopes, graphs, formulas,
/// certificates). `offset` is a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires ambient dimension 2, found {0}")]
    NotPlanar(usize),
    #[error("normal vector must not be zero")]
    ZeroNormal,
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjacencyError {
    #[error("an adjacency space needs at least one cell")]
    Empty,
    #[error("unknown cell `{0}`")]
    UnknownCell(String),
    #[error("duplicate cell `{0}`")]
    DuplicateCell(String),
    #[error("space is not connected")]
    Disconnected,
    #[error("space contains a cycle")]
    Cyclic,
    #[error("not a simple cycle: {0}")]
    NotSimpleCycle(String),
    #[error("cell {0} does not lie on the cycle")]
    NotOnCycle(usize),
    #[error("cell {b} is not a neighbour of {a} on the cycle")]
    NotCycleNeighbour { a: usize, b: usize },
    #[error("invalid numeration: {0}")]
    InvalidNumeration(String),
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error("space has {0} cells; set-based algebras support at most 128")]
    TooManyCells(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("variable `{0}` has no value in the valuation")]
    UnboundVariable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    /// A stage transfer did not hold. This signals a bug, never a property of
    /// the input formula.
    #[error("stage `{stage}` failed ({identity}): {detail}")]
    StageFailed {
        stage: &'static str,
        identity: &'static str,
        detail: String,
    },
}

/// Crate-wide error, mainly for front ends that want a single type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Adjacency(#[from] AdjacencyError),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
}
