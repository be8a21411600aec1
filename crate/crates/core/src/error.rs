use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid hyperedge: {0}")]
    InvalidEdge(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("hypergraph has an empty universe")]
    EmptyUniverse,

    #[error("hypergraph has no edges (d_1 = 0)")]
    NoEdges,

    #[error("colouring covers {got} vertices, hypergraph has {expected}")]
    PartialColouring { expected: usize, got: usize },

    #[error("colour {colour} at vertex {vertex} is outside 1..={max}")]
    ColourOutOfRange { vertex: usize, colour: u32, max: u32 },

    #[error("deletion set would exceed cap {cap} (partial set has {} vertices)", partial.len())]
    CapExceeded { cap: usize, partial: Vec<usize> },

    #[error("union bound dominance condition fails: r*s*tau*K > 2^(rs)*p")]
    DominanceViolated,

    #[error("tail bound requested outside 0 <= t <= mu/2")]
    OutsideTailRegime,

    #[error("value too large to materialise (log2 = {0})")]
    Overflow(String),

    #[error("fact check failed: {0}")]
    FactViolation(String),

    #[error("postcondition violated: {0}")]
    Postcondition(String),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
