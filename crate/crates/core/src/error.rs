use thiserror::Error;

/// Errors raised by the toolkit. Every operation is exact, so these are
/// domain errors (bad shapes, violated preconditions), never numerical ones.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("elements live in different algebras ({0} vs {1})")]
    MismatchedAlgebras(String, String),

    #[error("matrix is not an element of {0}: {1}")]
    NotInAlgebra(String, String),

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    /// The semisimple part does not split over Q; `factor` is the
    /// leftover rational-irreducible part of its minimal polynomial.
    #[error("spectrum is not rational; offending factor {factor}")]
    IrrationalSpectrum { factor: String },

    #[error("element is not nilpotent")]
    NotNilpotent,

    #[error("element is zero")]
    ZeroElement,

    #[error("invalid sl2-triple: {0}")]
    InvalidTriple(String),

    #[error("element is not regular (centralizer dimension {centralizer_dim} > rank {rank})")]
    NotRegular { centralizer_dim: usize, rank: usize },

    #[error("point does not lie on the slice")]
    NotOnSlice,

    #[error("invalid partition or composition: {0}")]
    InvalidPartition(String),

    #[error("invalid class label: {0}")]
    InvalidLabel(String),

    #[error("element is not diagonal")]
    NonDiagonal,

    #[error("element is not in the center of the Levi subalgebra: {0}")]
    NotInCenter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("independent cross-check disagreed: {0}")]
    CrossCheckFailed(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("bound exceeded: n = {n} > {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

impl LieError {
    /// Short machine-readable tag, used by the CLI error records.
    pub fn kind(&self) -> &'static str {
        match self {
            LieError::DimensionMismatch(_) => "DimensionMismatch",
            LieError::NotSquare { .. } => "NotSquare",
            LieError::MismatchedAlgebras(..) => "MismatchedAlgebras",
            LieError::NotInAlgebra(..) => "NotInAlgebra",
            LieError::ZeroPolynomial => "ZeroPolynomial",
            LieError::IrrationalSpectrum { .. } => "IrrationalSpectrum",
            LieError::NotNilpotent => "NotNilpotent",
            LieError::ZeroElement => "ZeroElement",
            LieError::InvalidTriple(_) => "InvalidTriple",
            LieError::NotRegular { .. } => "NotRegular",
            LieError::NotOnSlice => "NotOnSlice",
            LieError::InvalidPartition(_) => "InvalidPartition",
            LieError::InvalidLabel(_) => "InvalidLabel",
            LieError::NonDiagonal => "NonDiagonal",
            LieError::NotInCenter(_) => "NotInCenter",
            LieError::Precondition(_) => "Precondition",
            LieError::CrossCheckFailed(_) => "CrossCheckFailed",
            LieError::Unsupported(_) => "Unsupported",
            LieError::BoundExceeded { .. } => "BoundExceeded",
        }
    }
}

pub type Result<T> = std::result::Result<T, LieError>;
