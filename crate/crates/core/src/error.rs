use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("box ({row},{col}) lies outside the diagram")]
    BoxOutsideDiagram { row: usize, col: usize },

    #[error("operation requires a nonempty partition")]
    EmptyPartition,

    #[error("invalid step coordinates: {0}")]
    InvalidStepCoords(String),

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid indices (m={m}, j={j}, n={n}) for s={s}")]
    InvalidIndices {
        m: usize,
        j: usize,
        n: usize,
        s: usize,
    },

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("dimension d must be at least 1")]
    InvalidDimension,

    #[error("oracle bound exceeded: {what} = {value} > {bound}")]
    OracleBoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    /// The identity's normalizing count is zero, so it does not apply.
    #[error("zero denominator: SSYT({shape}, {d}) = 0")]
    ZeroDenominator { shape: String, d: u32 },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("configuration error: {0}")]
    Config(String),
}
