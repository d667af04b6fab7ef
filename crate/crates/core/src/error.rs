use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix has no rows or columns")]
    EmptyMatrix,
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("matrix is not symmetric at entry ({row},{col})")]
    Asymmetric { row: usize, col: usize },
    #[error("form is degenerate (determinant 0)")]
    Degenerate,
    #[error("form is not positive-definite")]
    NotPositiveDefinite,
    #[error("lattice is odd; an even lattice is required")]
    NotEven,
    #[error("rows do not span a full-rank lattice")]
    RankDeficient,
    #[error("not integral: {0}")]
    NotIntegral(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("discriminant group has {size} elements, above the cap of {cap}")]
    CapExceeded { size: String, cap: u64 },
    #[error("witness search failed: {0}")]
    SearchFailed(String),
    #[error("bound violated: {0}")]
    BoundViolated(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
