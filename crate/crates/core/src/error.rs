use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("vertex {0} out of range for graph of order {1}")]
    BadVertex(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph of order {order} exceeds the limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("vertex count mismatch: parameters give {expected} vertices, n = {given}")]
    CountMismatch { expected: i64, given: usize },
    #[error("graph is not a recognized central structure: {0}")]
    NotCentralStructure(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("polynomial is not the characteristic polynomial of a bipartite graph: {0}")]
    NotBipartitePolynomial(String),
    #[error("graphs have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("tolerance not reached after {0} refinement steps")]
    ToleranceUnreachable(usize),
    #[error("quadrature error estimate {estimate:e} exceeds target {target:e}")]
    QuadratureFailure { estimate: f64, target: f64 },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// True for errors caused by malformed user input rather than internal failures.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::ToleranceUnreachable(_) | Error::QuadratureFailure { .. }
        )
    }
}
