use thiserror::Error;

/// Errors surfaced by the library.
///
/// Operations that are total on their documented domain return values
/// directly; everything that can be handed bad input from a caller (degree
/// mismatches, malformed index tuples, expression text) reports through
/// this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part {part} at position {position} must be positive")]
    NonPositivePart { part: u32, position: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("descent set element {element} outside [0, {degree})")]
    DescentOutOfRange { element: u32, degree: u32 },

    #[error("descent set of a type A composition cannot contain 0")]
    TypeADescentZero,

    #[error("concatenation would place a zero part at position {position}")]
    InternalZeroPart { position: usize },

    #[error("letter {letter} is invalid in a signed permutation")]
    InvalidLetter { letter: i32 },

    #[error("letters {left} and {right} share an absolute value")]
    OverlappingLetters { left: i32, right: i32 },

    #[error("operation requires an all-positive permutation")]
    SignedInput,

    #[error("operation is defined on the type A subalgebra only; index ({index}) has x0-content")]
    NotTypeA { index: String },

    #[error("alphabet with {given} positive variables cannot carry this expansion (needs {needed})")]
    AlphabetTooSmall { needed: usize, given: usize },

    #[error("invalid peak set: {reason}")]
    InvalidPeakSet { reason: String },

    #[error("{index} is not a peak index of the requested flavor")]
    NotPeakIndex { index: String },

    #[error("alphabet-doubling expansion did not decompose into a tensor (near index {index})")]
    OracleInconsistency { index: String },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("degree {degree} exceeds the --max-degree guard ({guard})")]
    DegreeGuard { degree: u32, guard: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
