use thiserror::Error;

/// Errors raised when constructing or combining isotropy data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A point's weight index exceeds the ambient dimension.
    #[error("point {index}: j = {j} out of range for n = {n}")]
    WeightOutOfRange { index: usize, j: u64, n: u32 },

    /// A point's sign is neither +1 nor -1.
    #[error("point {index}: sign must be 1 or -1, got {value}")]
    InvalidSign { index: usize, value: i64 },

    /// Two data sets of different ambient dimension were combined additively.
    #[error("dimension mismatch: n = {left} vs n = {right}")]
    DimensionMismatch { left: u32, right: u32 },

    /// A multiplicity vector does not have n + 1 entries.
    #[error("{field} must have n + 1 = {expected} entries, got {actual}")]
    TableLength {
        field: &'static str,
        expected: usize,
        actual: usize,
    },

    /// A weight index argument exceeds the ambient dimension.
    #[error("j = {j} out of range for n = {n}")]
    IndexOutOfRange { j: u32, n: u32 },

    /// Multi-index entries must be positive.
    #[error("multi-index entry {index} must be positive")]
    ZeroMultiIndexEntry { index: usize },

    /// Exhaustive enumeration was requested over too large a space.
    #[error("enumeration over n = {n}, max_count = {max_count} is too large (limits: n <= 4, max_count <= 3)")]
    EnumerationTooLarge { n: u32, max_count: u32 },
}
