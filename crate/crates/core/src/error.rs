//! Crate-wide error type.
//!
//! Errors cover misuse that a caller can provoke with well-typed inputs
//! (mismatched rings, out-of-range indices, violated preconditions).
//! Internal invariants — e.g. the root-pair product being constant — are
//! enforced with assertions instead, since their failure means a bug here,
//! not bad input.

use thiserror::Error;

/// All failure modes exposed by this crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Two values from different base rings were combined.
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    /// A vector or matrix dimension did not match its context.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A permutation's degree did not match the algebra's degree.
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    /// A polynomial was given with no coefficients.
    #[error("a monic polynomial needs at least one coefficient below the lead")]
    EmptyCoefficients,

    /// A root-pair index (i, j) was not in range 1 ≤ i < j ≤ n.
    #[error("invalid root pair ({0}, {1}) for degree {2}")]
    InvalidPair(usize, usize, usize),

    /// An element required to be invariant under a permutation was not.
    #[error("element is not invariant under {0}")]
    NotInvariant(String),

    /// The given permutations generate a subgroup with no supported
    /// triviality test (not trivial, not a single transposition, not the
    /// full symmetric group).
    #[error("unsupported subgroup for triviality testing: {0}")]
    UnsupportedSubgroup(String),

    /// The claimed roots do not factor the polynomial.
    #[error("the given roots do not factor the polynomial")]
    RootsDoNotFactor,

    /// A documented precondition of an operation was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A constructed result failed its own verification; this indicates a
    /// bug in this crate, never bad input.
    #[error("internal verification failed: {0}")]
    InternalVerification(String),

    /// A textual input (ring spec, coefficient list, …) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}
