use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("invalid exponent p = {0}; need 1 < p < inf")]
    InvalidExponent(f64),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("the zero vector has no norming functional")]
    ZeroVector,

    #[error("element is not an atom")]
    NotAnAtom,

    #[error("vector is not on the unit sphere (norm {norm})")]
    NotUnit { norm: f64 },

    #[error("{what} did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
        residual: f64,
    },

    #[error("convex body rejected: {0}")]
    InvalidBody(String),

    #[error("state functional has dual norm {0} > 1")]
    InvalidState(f64),

    #[error("family is not pairwise orthogonal")]
    NonOrthogonalFamily,

    #[error("families do not sum to the same element")]
    FamilySumMismatch,

    #[error("exponents {p} and {q} are not conjugate")]
    ExponentMismatch { p: f64, q: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown check suite `{0}`")]
    UnknownSuite(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of a numerical procedure, as opposed to bad input.
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::NoConvergence { .. })
    }
}
