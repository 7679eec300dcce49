//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Division of a rational function by zero.
    #[error("zero divisor")]
    ZeroDivisor,

    /// Power series expansion of a rational function whose denominator
    /// vanishes at q = 0; the caller must pre-multiply by a power of q.
    #[error("pole at q=0")]
    PoleAtZero,

    /// Lagrange interpolation with two identical nodes.
    #[error("duplicate interpolation nodes")]
    DuplicateNodes,

    /// Evaluation of a coefficient at a root of its denominator.
    #[error("coefficient pole at q = {0}")]
    CoefficientPole(String),

    /// A configured work budget would be exceeded.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Interpolation on deg + 1 nodes failed to reproduce the enumeration at
    /// a verification node. This indicates the x-degree bound Lambda_V is
    /// wrong and must abort the run loudly.
    #[error("degree bound violated: {0}")]
    DegreeBoundViolated(String),

    /// The two closed forms for P_G(q) disagreed (must never happen).
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),

    /// An operation that requires a tree received a non-tree graph.
    #[error("not a tree: {0}")]
    NotATree(String),

    /// Vertex expansion at a weight-1 vertex.
    #[error("nothing to split: vertex {0} has weight 1")]
    NothingToSplit(usize),

    /// Edge argument not present in the graph.
    #[error("edge {{{0}, {1}}} not in graph")]
    EdgeNotFound(usize, usize),

    /// Malformed user input (graph files, weight lists, CLI arguments).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
