use thiserror::Error;

use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("operation undefined for the zero matrix")]
    ZeroMatrix,
    #[error("index {k} out of range 1..={n}")]
    OutOfRange { k: usize, n: usize },
    #[error("determinant over Z[sqrt(-5)] is capped at n <= {cap}, got {n}")]
    DimensionCap { n: usize, cap: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("not a square matrix")]
    NotSquare,
    #[error("invalid divisor chain: {0}")]
    InvalidChain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search exhausted up to coordinate bound {0}")]
    SearchExhausted(i64),
    #[error("scan too large: {pairs} pairs exceeds ceiling {ceiling}")]
    ScanTooLarge { pairs: u128, ceiling: u128 },
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
