//! Error type shared by all analyses in this crate.

use thiserror::Error;

/// Errors produced by graph construction, parsing, and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed edge-list text (bad token, wrong arity, missing header).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An edge from a vertex to itself.
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    /// The same edge listed twice.
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),

    /// A vertex id at or above the declared vertex count.
    #[error("vertex {id} out of range for a graph on {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },

    /// An operation that needs at least one vertex was given none.
    #[error("graph has no vertices")]
    EmptyGraph,

    /// An operation that requires a connected graph was given a disconnected one.
    #[error("graph is not connected")]
    NotConnected,

    /// An operation that requires a cactus was given a graph with an edge in
    /// two cycles.
    #[error("graph is not a cactus")]
    NotCactus,

    /// Exhaustive subset search refused on a graph above its size guard.
    #[error("graph too large for exhaustive search ({n} vertices, limit {limit})")]
    TooLarge { n: usize, limit: usize },

    /// A chain-family description that violates its constraints.
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    /// Random-generator parameters outside their domain.
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    /// A triangle or quadrangle has more or fewer than one external neighbor,
    /// so the simplified closed form does not apply.
    #[error("a triangle or quadrangle does not have exactly one external neighbor")]
    NotApplicable,
}

pub type Result<T> = std::result::Result<T, Error>;
