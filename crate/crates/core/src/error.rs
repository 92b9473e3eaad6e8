use thiserror::Error;

/// Errors raised by the structural operations of this crate.
///
/// Law violations are never errors: the suites report them as
/// counterexamples. An `Error` always means the caller handed an operation
/// data of the wrong shape.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation degrees differ: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("expected a sequence of length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0:?}")]
    NotABijection(Vec<usize>),

    #[error("invalid slot set {elements:?} in ambient size {ambient}")]
    InvalidSlotSet {
        elements: Vec<usize>,
        ambient: usize,
    },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("endpoint mismatch in {0}")]
    EndpointMismatch(String),

    #[error("lax functor failed coherence: {0}")]
    Incoherent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
