use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("column {0} is entirely -inf (pass the empty-column flag to allow it)")]
    EmptyColumn(usize),

    #[error("invalid scalar {0:?}")]
    Parse(String),

    #[error("value is not an exact integer: {0}")]
    NotIntegral(String),

    #[error("unsupported {0}")]
    NotCanonical(String),

    #[error("point has a -inf coordinate")]
    InfiniteCoordinate,

    #[error("size {size} exceeds the brute-force bound {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error("enumeration guard exceeded: {needed} candidates > {guard}")]
    Guard { needed: u128, guard: u64 },

    #[error("index {index} out of range {lo}..={hi}")]
    OutOfRange { index: usize, lo: usize, hi: usize },

    #[error("tropical determinant is -inf")]
    SingularDeterminant,

    #[error("positive-weight cycle through node {0}")]
    PositiveCycle(usize),

    #[error("complex is not pure")]
    NotPure,

    #[error("samples are not consistent with a polynomial of degree <= {0}")]
    NotPolynomial(usize),

    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("cross-check mismatch: {0}")]
    Mismatch(String),

    #[error("{0}")]
    Invalid(String),
}
