use thiserror::Error;

use crate::multigraph::{EdgeId, Vertex};

/// Errors raised by graph construction, the graph operations and the
/// decision procedures built on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} does not exist")]
    NoSuchVertex(Vertex),
    #[error("edge {0} does not exist")]
    NoSuchEdge(EdgeId),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set covers the whole graph")]
    FullSet,
    #[error("invalid vertex set: {0}")]
    BadVertexSet(String),
    #[error("graph is not 2-connected")]
    Not2Connected,
    #[error("{{{0}, {1}}} is not a 2-vertex cut")]
    NotACut(Vertex, Vertex),
    #[error("path length {len} has the wrong parity or is too short ({expected})")]
    BadParity { len: usize, expected: &'static str },
    #[error("both sides of a vertex split must be nonempty")]
    EmptySide,
    #[error("sides do not partition the edges at vertex {0}")]
    BadSides(Vertex),
    #[error("edge {0} is not admissible")]
    NotAdmissible(EdgeId),
    #[error("multiplicity {requested} is invalid for a class of multiplicity {current}")]
    BadMultiplicity { requested: usize, current: usize },
    #[error("even cycle {0:?} passes through both split vertices but not the new path")]
    SplitCycle(Vec<Vertex>),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("more than {0} cycles")]
    CapExceeded(usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(usize),
    #[error("{0} is not a valid base graph")]
    BadBase(String),
    #[error("step {index}: {source}")]
    Step {
        index: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("no valid step found after {0} proposals")]
    Stuck(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
