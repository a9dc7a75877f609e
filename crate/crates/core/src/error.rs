use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graphs have different degree sequences")]
    DegreeMismatch,

    #[error("graphs are of different kinds or sizes")]
    FlavorMismatch,

    #[error("degree sequence is not graphical")]
    NotGraphical,

    #[error("red-blue graph is not balanced at vertex {vertex}")]
    NotBalanced { vertex: usize },

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("edges do not form a decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("circuit is not elementary")]
    NotElementary,

    #[error("circuit is not a cycle of the bipartite representation")]
    NotACycle,

    #[error("symmetric difference does not match the circuit: {0}")]
    DifferenceMismatch(String),

    #[error("cycles do not kiss at vertex {vertex}")]
    NotKissing { vertex: usize },

    #[error("rejoined trails at vertex {vertex} do not form two non-triangular cycles")]
    KissingOverlap { vertex: usize },

    #[error("{what} budget of {limit} exceeded")]
    BudgetExceeded { what: &'static str, limit: usize },

    #[error("more than {cap} realizations")]
    CapExceeded { cap: usize },

    #[error("generated sequence failed verification at move {index}: {reason}")]
    VerificationFailed { index: usize, reason: String },
}
