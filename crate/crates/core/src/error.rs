use thiserror::Error;

/// Errors produced by parsing, combinatorics and the homological engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("the unit ideal is not representable (empty generator support)")]
    UnitIdeal,

    #[error("vertex index {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),

    #[error("vertex count {0} exceeds the supported maximum {1}")]
    TooManyVertices(usize, usize),

    #[error("operation requires a non-void complex")]
    VoidComplex,

    #[error("{0} is undefined for the zero ideal")]
    ZeroIdeal(&'static str),

    #[error("subset is not a face of the complex")]
    NotAFace,

    #[error("skeleton dimension {0} out of range {1}..={2}")]
    SkeletonRange(isize, isize, isize),

    #[error("invalid field characteristic {0}: must be 0 or a prime below 2^31")]
    BadCharacteristic(u64),

    #[error("unknown corpus family `{0}`")]
    UnknownFamily(String),

    #[error("corpus bounds exceeded: {0}")]
    CorpusBounds(String),

    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("verified implication failed: {0}")]
    ImplicationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
