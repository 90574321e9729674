use thiserror::Error;

/// Errors raised by graph construction, parsing and the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({tail}, {head}): endpoint out of range for {n} vertices")]
    VertexOutOfRange { tail: usize, head: usize, n: usize },

    #[error("edge ({vertex}, {vertex}): self-loops are not allowed")]
    SelfLoop { vertex: usize },

    #[error("edge ({tail}, {head}) with weight {weight}: path sums over {n} vertices would overflow the weight type")]
    WeightBound {
        tail: usize,
        head: usize,
        weight: String,
        n: usize,
    },

    #[error("source vertex {vertex} out of range for {n} vertices")]
    SourceOutOfRange { vertex: usize, n: usize },

    #[error("graph has a directed cycle")]
    CycleDetected,

    #[error("edge ({tail}, {head}) has negative weight {weight}")]
    NegativeWeight {
        tail: usize,
        head: usize,
        weight: String,
    },

    #[error("graph minus the sample stayed cyclic after {attempts} attempts")]
    ResidualCyclic { attempts: usize },

    #[error("next-table walk from {from} to {to} did not terminate")]
    MalformedTree { from: usize, to: usize },

    #[error("brute-force enumeration is limited to {limit} vertices, got {n}")]
    SizeLimit { n: usize, limit: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown algorithm {0:?}")]
    UnknownAlgorithm(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
