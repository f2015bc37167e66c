use thiserror::Error;

use crate::hypergraph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex identifiers must be positive, got {0}")]
    InvalidVertex(u64),
    #[error("edge {edge:?} is empty")]
    EmptyEdge { edge: usize },
    #[error("edge {edge:?} uses vertex {vertex} which is not in the vertex set")]
    UnknownVertex { edge: usize, vertex: Vertex },
    #[error("edges {first} and {second} are equal")]
    DuplicateEdge { first: usize, second: usize },
    #[error("edge {inner} is properly contained in edge {outer}")]
    NestedEdges { inner: usize, outer: usize },
    #[error("hypergraph is not a graph: edge {edge} has {size} vertices")]
    NotAGraph { edge: usize, size: usize },
    #[error("vertex set is not a subset of the ambient vertex set (offending vertex {0})")]
    NotASubset(Vertex),
    #[error("set is not a face of the complex")]
    NotAFace,
    #[error("set is not a facet of the complex")]
    NotAFacet,
    #[error("ground sets overlap at vertex {0}")]
    OverlappingGroundSets(Vertex),
    #[error("facets do not form an antichain")]
    NotAnAntichain,
    #[error("exponent entry {value} at vertex {vertex} exceeds the cap {cap}")]
    ExponentOutOfRange { vertex: Vertex, value: u32, cap: u32 },
    #[error("exponent vector has {got} entries, expected {expected}")]
    ExponentLength { got: usize, expected: usize },
    #[error("power must be at least 1")]
    ZeroPower,
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("hypergraph has no edges")]
    Edgeless,
    #[error("ideal is the {0} ideal")]
    DegenerateIdeal(&'static str),
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("move is not applicable: {0}")]
    InapplicableMove(String),
    #[error("configuration for {lemma} not found: {missing}")]
    ConfigurationAbsent { lemma: &'static str, missing: String },
    #[error("unknown lemma id {0:?}")]
    UnknownLemma(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
