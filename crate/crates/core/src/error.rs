use thiserror::Error;

use crate::simplex::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a simplex must contain at least one vertex")]
    EmptySimplex,
    #[error("simplex {0} is not a member of the complex")]
    NotInComplex(String),
    #[error("vertex {0} is not a vertex of the complex")]
    MissingVertex(VertexId),
    #[error("characteristic order {0} is not supported (expected 1..=4)")]
    UnsupportedOrder(usize),
    #[error("open-set enumeration exceeded the limit of {limit} (reached {partial})")]
    LimitExceeded { limit: usize, partial: usize },
    #[error("the given sets do not cover the complex")]
    NotACover,
    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeAbsent(VertexId, VertexId),
    #[error("function is not locally injective across edge ({0}, {1})")]
    NotLocallyInjective(VertexId, VertexId),
    #[error("level value collides with the value at vertex {0}")]
    LevelCollision(VertexId),
    #[error("map is not defined on {0}")]
    NotTotal(String),
    #[error("map is not continuous")]
    NotContinuous,
    #[error("induced map on forms does not commute with the exterior derivative")]
    NotChainMap,
    #[error("set is not a subcomplex")]
    NotSubcomplex,
    #[error("operation needs a nonempty complex")]
    EmptyComplex,
    #[error("expected complexes of dimension {expected}, found {found}")]
    DimensionMismatch { expected: isize, found: isize },
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown registry key `{0}`")]
    UnknownKey(String),
}

pub type Result<T> = std::result::Result<T, Error>;
