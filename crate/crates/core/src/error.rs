use thiserror::Error;

/// Reasons a graph, target vector or weight file is rejected after parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("at most {max} vertices are supported, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("entry {index} of the centrality vector is not strictly positive")]
    NonPositive { index: usize },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge {0}-{1} is not in the graph")]
    UnknownEdge(usize, usize),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("{what} is limited to n <= {bound}, got n = {n}")]
    ResourceLimit {
        what: &'static str,
        n: usize,
        bound: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("edge {0}-{1} has no weight")]
    MissingWeight(usize, usize),
    #[error("power iteration did not converge within {iterations} iterations")]
    NotConverged { iterations: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
