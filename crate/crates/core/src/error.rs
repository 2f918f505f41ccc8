use thiserror::Error;

use crate::face::Face;

/// Errors produced by the library. The CLI maps these onto exit codes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex label {label} is outside 1..={max}")]
    LabelOutOfRange { label: u64, max: u32 },

    #[error("ambient size {0} is not supported (must be 1..=64)")]
    AmbientSize(u32),

    #[error("{face} is not a face of the complex")]
    NotAFace { face: Face },

    #[error("vertex {vertex} is already used by the complex")]
    VertexInUse { vertex: u32 },

    #[error("empty input")]
    EmptyInput,

    #[error("order complex would need {0} vertices, more than 64")]
    TooManyVertices(usize),

    #[error("dimension {k} is out of range for a complex of dimension {dim}")]
    DimensionOutOfRange { k: i32, dim: i32 },

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("operation requires a nonvoid complex")]
    VoidComplex,

    #[error("illegal collapse step ({sigma}, {tau}): {reason}")]
    IllegalStep {
        sigma: Face,
        tau: Face,
        reason: String,
    },

    #[error("no codeword contains {0}")]
    EmptyRegion(Face),

    #[error("n = {0} exceeds the cell enumeration bound of 12")]
    TooLarge(u32),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: binary and integer codeword notations are mixed")]
    MixedNotation { line: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
