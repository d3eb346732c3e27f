use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("oracle-only configuration: {0}")]
    OracleOnly(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has a repeated root inside (-1, 1) near {approx}")]
    NonSimpleRoot { approx: f64 },
    #[error("unsupported in exact arithmetic: {0}")]
    NotExact(String),
    #[error("perturbation window too large: rank {rank} exceeds {max}")]
    WindowTooLarge { rank: usize, max: usize },
}
