use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad category of an [`Error`], used by front-ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or inconsistent input, or a violated precondition.
    Input,
    /// A configured search/enumeration budget or size cap was hit.
    Budget,
    /// A result contradicting a proven statement; always an implementation bug.
    Contradiction,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {0}-{0} is a loop")]
    LoopEdge(VertexId),
    #[error("edge {0}-{1} appears more than once")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge references undeclared vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {0} is declared more than once")]
    DuplicateVertex(VertexId),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("operands live on different ground sets")]
    GroundMismatch,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(VertexId),
    #[error("circuit enumeration exceeded the budget of {0} circuits")]
    CircuitBudgetExceeded(usize),
    #[error("search exceeded the budget of {0} nodes")]
    SearchBudgetExceeded(u64),
    #[error("span dimension {dim} exceeds the cap {cap}")]
    DimensionCapExceeded { dim: usize, cap: usize },
    #[error("{what} is {size}, above the cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),
    #[error("input graph is Hamiltonian")]
    HamiltonianInput,
    #[error("assignment is not a bijection")]
    NotBijective,
    #[error("map is not a circuit injection")]
    NotInjection,
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("witness set is already in the circuit span")]
    SInSpan,
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("construction window self-test failed: circuit {0:?} misses a label")]
    SelfTestFailed(Vec<usize>),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("decomposition certificate failed: {0}")]
    CertificateFailure(String),
    #[error("no witness set found: {0}")]
    NoWitnessFound(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::CircuitBudgetExceeded(_)
            | Error::SearchBudgetExceeded(_)
            | Error::DimensionCapExceeded { .. }
            | Error::CapExceeded { .. } => ErrorKind::Budget,
            Error::SelfTestFailed(_)
            | Error::InternalContradiction(_)
            | Error::CertificateFailure(_)
            | Error::NoWitnessFound(_) => ErrorKind::Contradiction,
            _ => ErrorKind::Input,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
