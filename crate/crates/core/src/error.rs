use thiserror::Error;

use crate::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a digraph needs at least one vertex")]
    NoVertices,

    #[error("arc {tail}->{head} has an endpoint outside 0..{n}")]
    ArcOutOfRange {
        tail: VertexId,
        head: VertexId,
        n: usize,
    },

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("duplicate arc {tail}->{head}")]
    DuplicateArc { tail: VertexId, head: VertexId },

    #[error("vertex {vertex} is outside 0..{n}")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("label {0:?} is used by more than one vertex")]
    DuplicateLabel(String),

    #[error("digraph is not strongly connected: no path from {from} to {to}")]
    NotStronglyConnected { from: VertexId, to: VertexId },

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("factor list must be nonempty")]
    NoFactors,

    #[error("product would have {size} vertices, budget is {budget}")]
    BudgetExceeded { size: usize, budget: usize },

    #[error(
        "shortcut requires at most one factor without two-sided eccentricity, found {lacking}"
    )]
    ShortcutInvalid { lacking: usize },

    #[error("expected {expected} coordinates, got {got}")]
    CoordinateArity { expected: usize, got: usize },

    #[error("digraph has {actual} vertices but the factors multiply to {expected}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
