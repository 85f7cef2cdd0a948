//! Error type shared by every module of the crate.

use std::fmt;

/// Errors raised by arithmetic, counting, and verification routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The element has no multiplicative inverse modulo `modulus`.
    NotInvertible { value: u64, modulus: u64 },
    /// The modulus does not satisfy what the operation requires (e.g. odd prime).
    InvalidModulus { n: u64, reason: &'static str },
    /// An argument fell outside the documented range.
    OutOfRange {
        what: &'static str,
        value: u64,
        limit: u64,
    },
    /// Two field elements belong to different field specifications.
    SpecMismatch,
    /// Inversion of the zero element of a field.
    ZeroInverse,
    /// The structure is too large for an exhaustive operation.
    TooLarge { size: u64, limit: u64 },
    /// The operation's formula path is not defined over this structure.
    UnsupportedStructure {
        structure: String,
        reason: &'static str,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInvertible { value, modulus } => {
                write!(f, "{value} is not invertible modulo {modulus}")
            }
            Error::InvalidModulus { n, reason } => write!(f, "invalid modulus {n}: {reason}"),
            Error::OutOfRange { what, value, limit } => {
                write!(f, "{what} = {value} out of range (limit {limit})")
            }
            Error::SpecMismatch => write!(f, "field elements belong to different field specs"),
            Error::ZeroInverse => write!(f, "zero has no multiplicative inverse"),
            Error::TooLarge { size, limit } => {
                write!(f, "structure of size {size} exceeds exhaustive limit {limit}")
            }
            Error::UnsupportedStructure { structure, reason } => {
                write!(f, "unsupported over {structure}: {reason}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
