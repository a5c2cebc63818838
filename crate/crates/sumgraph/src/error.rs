use crate::graph::Edge;

/// Errors surfaced by graph construction, lookups and the coloring machinery.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("label set must be non-empty")]
    EmptyLabelSet,

    #[error("duplicate label {0} in label set")]
    DuplicateLabel(i64),

    #[error("label {0} is not a vertex of this graph")]
    LabelNotFound(i64),

    #[error("interval [{r}, {s}] violates the convention r + s >= 0")]
    IntervalConvention { r: i64, s: i64 },

    #[error("{0}")]
    Domain(String),

    #[error("label {0} does not fit in a machine integer")]
    Overflow(String),

    #[error("edge ({lo}, {hi}) does not belong to the graph", lo = .0.lo(), hi = .0.hi())]
    ForeignEdge(Edge),

    #[error("certificate failed verification: {0}")]
    InvalidCertificate(String),

    #[error("graph has {edges} edges, over the solver budget of {budget}")]
    BudgetExceeded { edges: usize, budget: usize },

    #[error("malformed document: {0}")]
    Parse(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
