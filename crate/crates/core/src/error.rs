use thiserror::Error;

pub type Result<T> = std::result::Result<T, FusionError>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FusionError {
    #[error("invalid fusion data: {0}")]
    InvalidData(String),

    #[error("elements belong to different fusion data")]
    MismatchedContext,

    #[error("operation requires fusion data (simple unit), found {0} unit summands")]
    NotFusion(usize),

    #[error("fusion data is not transitive: {0}")]
    NotTransitive(String),

    #[error("structural axioms violated: {0}")]
    Structural(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("search space too large: {0}")]
    Resource(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("unknown builtin fixture `{0}`")]
    UnknownFixture(String),

    #[error("unsupported base field: {0}")]
    UnsupportedField(String),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
}
