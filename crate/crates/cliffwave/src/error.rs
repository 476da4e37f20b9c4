use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u32, u32),
    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: u32, dim: u32 },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("expected a pure bivector")]
    NotABivector,
    #[error("not a valid spin element: {0}")]
    NotASpinElement(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("input is not simplicial: {0}")]
    NotSimplicial(String),
    #[error("band limit exceeded: {0}")]
    BandLimitExceeded(String),
    #[error("quadrature exactness {have} insufficient, need at least {need}")]
    QuadratureInsufficient { have: usize, need: usize },
    #[error("wavelet family mismatch: {0}")]
    FamilyMismatch(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("malformed data: {0}")]
    Malformed(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
