use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("series must have constant term {expected}, found {found}")]
    BadConstantTerm { expected: &'static str, found: String },

    #[error("precision mismatch: {left} vs {right}")]
    PrecisionMismatch { left: usize, right: usize },

    #[error("precision {precision} is too small for degree bound {max_deg} (need at least {})", 2 * max_deg)]
    InsufficientPrecision { precision: usize, max_deg: usize },

    #[error("no rational function of degree <= {max_deg} matches the series to precision {precision}")]
    NotRational { max_deg: usize, precision: usize },

    #[error("adjacency matrix has a negative entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },

    #[error("quiver is not acyclic (adjacency matrix is not nilpotent)")]
    NotAcyclic,

    #[error("left and right kernels of the pairing disagree")]
    KernelsDisagree,

    #[error("block {index} is singular")]
    SingularBlock { index: usize },

    #[error("realization is not invertible: {which} is singular")]
    NotInvertible { which: &'static str },

    #[error("functional equation fails for both signs")]
    NoSignWorks,

    #[error("negative dimension {value} at index {index}")]
    NegativeDimension { index: usize, value: i64 },

    #[error("enumeration needs {needed} representatives, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("invalid field: p = {p} must be prime and r = {r} positive")]
    InvalidField { p: u64, r: u32 },

    #[error("field order mismatch: scheme is over F_{scheme_q}, tower is F_{tower_q}")]
    FieldMismatch { scheme_q: u64, tower_q: u64 },

    #[error("equation {index} is not homogeneous")]
    NotHomogeneous { index: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
