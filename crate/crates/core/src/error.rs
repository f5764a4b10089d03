//! Error type shared by every module of the crate.
//!
//! Three failure classes are distinguished because callers react to them
//! differently: malformed input is a caller bug in constructing the data,
//! a domain error is a well-formed value outside an operation's
//! precondition, and an invariant violation means the library itself
//! produced something it proved impossible. The last kind is never caught
//! and repaired; it is surfaced so the defect is visible.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Structurally malformed input: ragged grids inconsistent with a
    /// declared shape, unparsable text, or non-positive entries.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// Well-formed input outside an operation's precondition.
    #[error("{0}")]
    Domain(String),

    /// A postcondition the implementation relies on failed to hold.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// An exhaustive computation was refused because the instance is too
    /// large for the configured bound.
    #[error("{what}: {boxes} boxes exceeds the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        boxes: usize,
        limit: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
