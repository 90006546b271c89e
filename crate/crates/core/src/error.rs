use thiserror::Error;

/// Errors raised while building or transforming Nakayama algebras.
///
/// Indices carried by the relation variants refer to positions in the list the
/// caller supplied, so front ends can point at the offending entry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quiver size {n} is too small (need at least 2 vertices)")]
    QuiverTooSmall { n: usize },

    #[error("quiver size {n} exceeds the supported maximum of {max}")]
    QuiverTooLarge { n: usize, max: usize },

    #[error("relation set is empty; the path algebra of a cycle is infinite dimensional")]
    EmptyRelationSet,

    #[error("relation {index} starts at vertex {start}, outside 1..={n}")]
    StartOutOfRange { index: usize, start: usize, n: usize },

    #[error("relation {index} has length zero")]
    ZeroLength { index: usize },

    #[error("relations {first} and {second} both start at vertex {start}")]
    DuplicateStart { first: usize, second: usize, start: usize },

    #[error("relation {contained} is a subword of relation {container}")]
    RedundantRelation { contained: usize, container: usize },

    #[error("Kupisch series has {len} entries; need at least 2")]
    KupischTooShort { len: usize },

    #[error("Kupisch entry {position} is zero")]
    KupischEntryZero { position: usize },

    #[error("Kupisch series drops too fast after entry {position}: c[next] must be >= c[{position}] - 1")]
    InvalidKupisch { position: usize },

    #[error("module top {top} is outside 1..={n}")]
    ModuleTopOutOfRange { top: usize, n: usize },

    #[error("module ({top}, {length}) is longer than the projective P_{top} of length {max}")]
    ModuleTooLong { top: usize, length: usize, max: usize },

    #[error("vertex {vertex} is not a leaf of the resolution quiver")]
    NotALeaf { vertex: usize },

    #[error("unamalgamation needs n >= 3, got n = {n}")]
    TooSmall { n: usize },

    #[error("{path}: {message}")]
    Schema { path: String, message: String },

    #[error("{path}: {source}")]
    At { path: String, source: Box<Error> },
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::QuiverTooSmall { .. } => "QUIVER_TOO_SMALL",
            Error::QuiverTooLarge { .. } => "QUIVER_TOO_LARGE",
            Error::EmptyRelationSet => "EMPTY_RELATION_SET",
            Error::StartOutOfRange { .. } => "START_OUT_OF_RANGE",
            Error::ZeroLength { .. } => "ZERO_LENGTH",
            Error::DuplicateStart { .. } => "DUPLICATE_START",
            Error::RedundantRelation { .. } => "REDUNDANT_RELATION",
            Error::KupischTooShort { .. } => "KUPISCH_TOO_SHORT",
            Error::KupischEntryZero { .. } => "KUPISCH_ENTRY_ZERO",
            Error::InvalidKupisch { .. } => "INVALID_KUPISCH",
            Error::ModuleTopOutOfRange { .. } => "MODULE_TOP_OUT_OF_RANGE",
            Error::ModuleTooLong { .. } => "MODULE_TOO_LONG",
            Error::NotALeaf { .. } => "NOT_A_LEAF",
            Error::TooSmall { .. } => "TOO_SMALL",
            Error::Schema { .. } => "SCHEMA",
            Error::At { source, .. } => source.code(),
        }
    }

    /// JSON path of the offending input, when known.
    pub fn path(&self) -> Option<&str> {
        match self {
            Error::Schema { path, .. } | Error::At { path, .. } => Some(path),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
