use thiserror::Error;

/// Errors surfaced by the library. Input validation failures are recoverable;
/// `Internal` signals a broken invariant and should abort the caller.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {{{0}, {1}}} out of range for vertex set [{2}]")]
    EdgeOutOfRange(usize, usize, usize),
    #[error("loop edge at vertex {0} is not allowed")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("cell ({0}, {1}) out of range for a {2}x{3} pattern")]
    CellOutOfRange(usize, usize, usize, usize),
    #[error("duplicate cell ({0}, {1})")]
    DuplicateCell(usize, usize),
    #[error("order {0:?} is not a permutation of [{1}]")]
    NotAPermutation(Vec<usize>, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dissimilarity map is partial: pair {{{0}, {1}}} is missing")]
    PartialMap(usize, usize),
    #[error("prescribed values do not match the observed pair set at {{{0}, {1}}}")]
    ValueDomainMismatch(usize, usize),
    #[error("internal edge ({0}, {1}) has non-positive weight")]
    NonPositiveInternalWeight(usize, usize),
    #[error("leaf count {0} is too small (need at least {1})")]
    TooFewLeaves(usize, usize),
    #[error("leaf count {0} exceeds the enumeration cap {1}")]
    CapExceeded(usize, usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
