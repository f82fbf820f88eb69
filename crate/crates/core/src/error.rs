use thiserror::Error;

use crate::torus::{SimplicityWitness, TorusParams};
use crate::verify::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} lists neighbour {neighbour}, but there are only {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, neighbour: usize, vertex_count: usize },
    #[error("vertex {vertex} lists itself as a neighbour")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} lists neighbour {neighbour} more than once")]
    RepeatedNeighbour { vertex: usize, neighbour: usize },
    #[error("vertex {from} lists {to}, but {to} does not list {from}")]
    AsymmetricRotation { from: usize, to: usize },
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("m and n must be positive (got m={m}, n={n})")]
    ZeroDimension { m: usize, n: usize },
    #[error("shift t={t} out of range 0..{n}")]
    ShiftOutOfRange { t: usize, n: usize },
    #[error("T({},{},{}) is not simple: {witness}", .params.m, .params.n, .params.t)]
    NotSimple { params: TorusParams, witness: SimplicityWitness },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("colouring covers {got} vertices but the graph has {expected}")]
    Partial { expected: usize, got: usize },
    #[error("vertex {vertex} has colour 0; colours are positive")]
    ZeroColour { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error("construction for T({},{},{}) failed: {violation}", .params.m, .params.n, .params.t)]
    ConstructionFailed { params: TorusParams, violation: Violation },
    #[error("construction for T({},{},{}) failed: {reason}", .params.m, .params.n, .params.t)]
    NoCandidate { params: TorusParams, reason: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("node budget of {budget} exceeded")]
    ResourceLimit { budget: u64 },
    #[error("neighbour {neighbour} of vertex {vertex} is uncoloured")]
    NeighbourUncoloured { vertex: usize, neighbour: usize },
    #[error("vertex {vertex} is already coloured")]
    AlreadyColoured { vertex: usize },
    #[error("at most {max} colours are supported, asked for {requested}")]
    TooManyColours { requested: usize, max: usize },
    #[error("search bound k must be at least 1")]
    ZeroBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("ledger is in phase {found:?}, expected {expected:?}")]
    Phase { expected: crate::discharge::Phase, found: crate::discharge::Phase },
    #[error("ledgers belong to different graphs")]
    GraphMismatch,
    #[error("vertex {vertex} has degree {degree}; blocks need degree at least 7")]
    DegreeTooSmall { vertex: usize, degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: EmbeddingError },
    #[error(transparent)]
    Colouring(#[from] ColouringError),
}
