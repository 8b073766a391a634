//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by field construction, polynomial operations, solving and
/// the point-search machinery.
#[derive(Debug, Error)]
pub enum Error {
    /// A prime field was requested for a composite characteristic.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Inversion of the zero element.
    #[error("division by zero")]
    DivisionByZero,

    /// Operands belong to different fields and no embedding applies.
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    /// Operands belong to different polynomial rings.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// A point has the wrong number of coordinates for the ring.
    #[error("coordinate count mismatch: expected {expected}, got {got}")]
    CoordinateCount { expected: usize, got: usize },

    /// Text input violated the polynomial or job grammar.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    /// A documented precondition was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A computation exceeded its caller-supplied step budget.
    #[error("budget exhausted: {0}")]
    Budget(String),

    /// No point of the variety could be located within the search budget.
    #[error("point search failed: no point of V(I) found within the attempt budget")]
    PointSearchFailure,

    /// The matrix had rank below the requested minor size at every point tried.
    #[error("rank deficient: matrix rank below requested size at every attempted point")]
    RankDeficient,

    /// An operation requiring a finite solution set was given a
    /// positive-dimensional ideal.
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
}

pub type Result<T> = std::result::Result<T, Error>;
