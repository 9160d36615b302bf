use thiserror::Error;

/// Errors surfaced by every module of the crate.
///
/// Display strings are single-line so the CLI can print them verbatim.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),
    #[error("graph too large: {edges} edges exceeds cap {cap}")]
    GraphTooLarge { edges: u64, cap: usize },
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("label out of range: {0}")]
    LabelOutOfRange(String),
    #[error("defined for 1xmxn only (got k={0})")]
    RequiresSingleLayer(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a perfect matching: {0}")]
    NotPerfectMatching(String),
    #[error("too many plane partitions: more than {0}")]
    TooManyPartitions(usize),
    #[error("too many perfect matchings: more than {0}")]
    TooManyMatchings(usize),
    #[error("complex too large: {0}")]
    ComplexTooLarge(String),
    #[error("void complex: {0}")]
    VoidComplex(&'static str),
    #[error("too many facets for nerve: {count} exceeds {max}")]
    TooManyFacets { count: usize, max: usize },
    #[error("vertex {vertex} outside ground set of size {ground}")]
    OutsideGround { vertex: usize, ground: usize },
    #[error("duplicate pairing vertex: {0}")]
    DuplicatePairingVertex(String),
    #[error("malformed pairing: {0}")]
    MalformedPairing(String),
    #[error("pairing is not acyclic")]
    CyclicPairing,
    #[error("parameter out of supported range: {0}")]
    OutOfRange(String),
    #[error("alias table check failed: {0}")]
    AliasTable(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
