use thiserror::Error;

/// Errors raised by graph construction, parsing, and the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph must have at least one vertex")]
    Empty,

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("Jacobi eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("matrix is numerically singular")]
    Singular,

    #[error("matrix is not a graph Laplacian: row {row} sums to {sum:e}")]
    NotLaplacian { row: usize, sum: f64 },

    #[error("expected exactly one zero Laplacian eigenvalue, found {0}")]
    ZeroEigenvalues(usize),

    #[error("vertices must be distinct (got {0} twice)")]
    SameVertex(usize),

    #[error("graph has no edges")]
    NoEdges,

    #[error("enumeration limited to {cap} edges, graph has {edges}")]
    EnumerationCap { edges: usize, cap: usize },

    #[error("determinant {0} is not close to an integer")]
    NotInteger(f64),

    #[error("weight on edge {{{0}, {1}}} is not positive definite")]
    NotPositiveDefinite(usize, usize),

    #[error("matrix is not symmetric positive definite")]
    NotPositiveDefiniteMatrix,

    #[error("graph is not a tree")]
    NotTree,

    #[error("invalid tree resistance matrix: {0}")]
    InvalidResistance(String),

    /// Two routes that must agree did not; points at a numerical or logic bug.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for errors signalling disagreement between independent routes.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistent(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
