use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid step function: {0}")]
    InvalidStepFunction(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("invalid spectral model: {0}")]
    InvalidModel(String),

    #[error("unknown named model or density `{0}`")]
    UnknownName(String),

    #[error("matrix is not Hermitian (max asymmetry {0:e})")]
    NotHermitian(f64),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid rank {k} for dimension {n}")]
    InvalidRank { k: usize, n: usize },

    #[error("invalid support sample: {0}")]
    InvalidSupport(String),

    #[error("supporting half-planes have empty intersection: {0}")]
    InconsistentSupport(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("alpha table has no entry for {0}")]
    MissingTableEntry(f64),

    #[error("oracle input too large: {0}")]
    OracleLimit(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
