//! Error type shared by every module of this crate.

use crate::complex::Complex;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument of zero undefined")]
    ZeroArgument,

    #[error("zero base requires a positive exponent")]
    ZeroToNonPositivePower,

    #[error("non-finite result: {op} at {input}")]
    NonFinite { op: String, input: Complex },

    #[error("side length must be positive, got {0}")]
    NonPositiveSide(f64),

    #[error("degenerate triangle: vertices must be pairwise distinct")]
    DegenerateTriangle,

    #[error("stage {stage} outside 1..={max}")]
    StageOutOfRange { stage: u32, max: u32 },

    #[error("triangle count {count} does not match stage {stage}")]
    WrongTriangleCount { stage: u32, count: usize },

    #[error("similitude system needs at least one contraction map")]
    EmptySystem,

    #[error("similitude scale {0} is not a contraction")]
    NotAContraction(Complex),

    #[error("depth {depth} outside 0..={max}")]
    DepthOutOfRange { depth: u32, max: u32 },

    #[error("sentinel inseparable beyond depth 5")]
    SentinelInseparable,

    #[error("power exponent {0} outside 1..={1}")]
    PowerOutOfRange(u32, u32),

    #[error("rational exponent must be positive, got {num}/{den}")]
    NonPositiveExponent { num: u32, den: u32 },

    #[error("path has no nonzero points")]
    NoNonzeroPoints,

    #[error("all points clipped")]
    AllPointsClipped,

    #[error("invalid render style: {0}")]
    InvalidStyle(String),

    #[error("invalid viewport: {0}")]
    InvalidViewport(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("line {line}: {message}")]
    CsvParse { line: usize, message: String },
}
