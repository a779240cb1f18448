use alloc::string::String;
use core::fmt;

/// Errors raised by the library.
///
/// Variants split into domain errors (bad input, refused work) and
/// [`Error::Internal`], which reports a violated mathematical invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An arrow starts and ends at the same vertex.
    Loop {
        vertex: String,
    },
    /// An arrow endpoint that is not a declared vertex.
    UnknownVertex {
        vertex: String,
    },
    DuplicateVertex {
        vertex: String,
    },
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// A vector lies outside the truncation box it was paired with.
    OutOfBox,
    DivisionByZero,
    /// Evaluation of a rational function at one of its poles.
    Pole,
    /// A documented precondition of an operation does not hold.
    Precondition(&'static str),
    /// Brute-force enumeration would exceed the configured cap.
    SearchSpaceTooLarge {
        size: u128,
        cap: u128,
    },
    NotPrime(u32),
    /// A computed quantity violates a theorem it must satisfy.
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Loop { vertex } => write!(f, "quiver has a loop at vertex {vertex:?}"),
            Error::UnknownVertex { vertex } => write!(f, "arrow endpoint {vertex:?} is not a vertex"),
            Error::DuplicateVertex { vertex } => write!(f, "vertex {vertex:?} declared twice"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected} entries, found {found}")
            }
            Error::OutOfBox => write!(f, "vector exceeds the truncation bound"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Pole => write!(f, "rational function has a pole at the evaluation point"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::SearchSpaceTooLarge { size, cap } => {
                write!(f, "search space of {size} exceeds the cap of {cap}")
            }
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::Internal(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
