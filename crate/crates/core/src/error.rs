use crate::grade::Grade;

/// Errors shared across the workbench modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("wrong shape: {detail}")]
    WrongShape { detail: String },

    /// Table entry outside `[0, n)`. Coordinates are 0-based as received.
    #[error("entry out of range at table {table}, row {row}, col {col}: {entry}")]
    OutOfRange {
        table: usize,
        row: usize,
        col: usize,
        entry: usize,
    },

    #[error("carrier size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("alpha {alpha} out of range (0, 1]")]
    AlphaOutOfRange { alpha: Grade },

    #[error("carrier too large: n={n} exceeds bound {bound}")]
    CarrierTooLarge { n: usize, bound: usize },

    /// `element` is the 0-based index of the offending carrier element.
    #[error("mu+nu exceeds 1 at element {}: {mu} + {nu}", element + 1)]
    SumExceedsOne {
        element: usize,
        mu: Grade,
        nu: Grade,
    },

    #[error("length mismatch: expected {expected} grades, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("theorem {id} takes {expected} IFS argument(s), got {got}")]
    ArityMismatch {
        id: &'static str,
        expected: &'static str,
        got: usize,
    },

    #[error("hypothesis failed: {detail}")]
    HypothesisFailed { detail: String },

    #[error("no composition characterization for kind {kind}")]
    UnsupportedKind { kind: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
