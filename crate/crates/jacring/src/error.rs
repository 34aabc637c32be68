use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not 0 or a prime below 2^31")]
    InvalidCharacteristic(u64),

    #[error("scalars belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator {0} is zero in {1}")]
    BadDenominator(String, String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("expected a nonzero linear form")]
    NotLinearForm,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("form must have degree at least {0}")]
    DegreeTooSmall(u32),

    #[error("form is not smooth ({0})")]
    NotSmooth(String),

    #[error("smoothness undecided within the degree budget (swept up to degree {0})")]
    SmoothnessUnknown(u32),

    #[error("hyperplane section is singular")]
    SectionSingular,

    #[error("exhaustive enumeration needs a finite prime field")]
    NeedsFiniteField,

    #[error("characteristic {0} divides the degree {1}; the Euler normalization is unavailable")]
    CharacteristicDividesDegree(u32, u32),

    #[error("expected {expected} variables, found {found}")]
    WrongVariableCount { expected: usize, found: usize },

    #[error("resource guard: {0}")]
    ResourceGuard(String),

    #[error("unknown demo '{0}' (available: fermat-kernel, char2, contracted-lines, koszul)")]
    UnknownDemo(String),

    #[error("no sample satisfying the open condition within {0} trials")]
    SamplingExhausted(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
