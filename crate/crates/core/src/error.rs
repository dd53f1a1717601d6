use thiserror::Error;

/// Errors surfaced by the workbench.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not nilpotent within {0} powers")]
    NotNilpotent(usize),
    #[error("invalid root system type {family}{rank}")]
    InvalidType { family: char, rank: usize },
    #[error("weight is not dominant")]
    NonDominantWeight,
    #[error("operator is not diagonalizable with rational spectrum")]
    NonRationalSpectrum,
    #[error("split Cartan search failed: {0}")]
    SplitCartanFailed(String),
    #[error("grading element does not act with an integral diagonalizable spectrum")]
    GradingNotIntegral,
    #[error("grading is not extraspecial (extreme components must be one-dimensional)")]
    NotExtraspecial,
    #[error("symplectic form is degenerate")]
    DegenerateForm,
    #[error("type identification failed: {0}")]
    Identification(String),
    #[error("unknown claim id {0}")]
    UnknownClaim(String),
    #[error("map is not a Lie algebra homomorphism")]
    NotHomomorphism,
    #[error("exchange format error: {0}")]
    Exchange(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
