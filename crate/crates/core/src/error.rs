use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A graph or construction would exceed the 64-vertex capacity,
    /// or an exact algorithm was asked to run past its configured limit.
    #[error("capacity exceeded: {requested} requested, limit {limit} ({what})")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    /// Checked arithmetic overflowed. Counts are unsigned 64-bit and
    /// overflow is always reported, never wrapped.
    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),

    /// An operation's precondition does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Parameters outside the supported range (e.g. cycle threshold below 5
    /// where the construction arithmetic is undefined).
    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    /// A construction family is inapplicable to the given parameters; the
    /// message names the violated constraint.
    #[error("{family} not applicable: {constraint}")]
    Family {
        family: &'static str,
        constraint: String,
    },

    /// Malformed graph6 text, with the byte offset of the first bad byte.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A value outside the range a formula is stated for.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// The persistent result cache contains an entry that fails
    /// re-validation.
    #[error("cache integrity error: {0}")]
    Integrity(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
