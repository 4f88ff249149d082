use thiserror::Error;

/// Errors raised while decoding graph6 text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("character {0:?} at byte {1} is outside the printable range 63..=126")]
    CharOutOfRange(char, usize),
    #[error("malformed length prefix")]
    MalformedLength,
    #[error("expected {expected} data bytes for order {order}, found {found}")]
    LengthMismatch {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("padding bits of the final data byte are not zero")]
    TrailingBits,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("k = {k} out of range for order {order} (need 1 <= k < order)")]
    KOutOfRange { k: usize, order: usize },
    #[error("order {order} exceeds the limit {limit}")]
    OrderLimit { order: usize, limit: usize },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph is not matching covered")]
    NotMatchingCovered,
    #[error("graph is not bicritical")]
    NotBicritical,
    #[error("graph is not minimal bicritical")]
    NotMinimalBicritical,
    #[error("{{{0}, {1}}} is a barrier, not a 2-separation")]
    Barrier(usize, usize),
    #[error("{{{0}, {1}}} does not disconnect the graph")]
    NotACut(usize, usize),
    #[error("split would produce a child with {0} vertices")]
    ChildTooSmall(usize),
    #[error("check not applicable: {0}")]
    Inapplicable(String),
    #[error("unknown check or predicate {0:?}")]
    UnknownPredicate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
