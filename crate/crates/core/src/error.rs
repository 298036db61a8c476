use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid shape {rows}x{cols}: dimensions must be positive")]
    EmptyShape { rows: usize, cols: usize },

    #[error("expected {expected} entries, got {actual}")]
    EntryCount { expected: usize, actual: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("{op}: shape mismatch {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{op}: expected a square matrix, got {rows}x{cols}")]
    NotSquare { op: &'static str, rows: usize, cols: usize },

    #[error("{op}: dimension mismatch {left} vs {right}")]
    DimensionMismatch {
        op: &'static str,
        left: usize,
        right: usize,
    },

    #[error("block ({row}, {col}) has shape {actual:?}, expected {expected:?}")]
    BlockShape {
        row: usize,
        col: usize,
        expected: (usize, usize),
        actual: (usize, usize),
    },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:e} below {threshold:e}")]
    NotPsd { eigenvalue: f64, threshold: f64 },

    #[error("{what} did not converge within {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },

    #[error("{what} must lie in {range}, got {value}")]
    OutOfRange {
        what: &'static str,
        range: &'static str,
        value: f64,
    },

    #[error("characteristic polynomial oracle supports side <= 8, got {0}")]
    OracleTooLarge(usize),

    #[error("unknown sample kind `{0}`")]
    UnknownKind(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
