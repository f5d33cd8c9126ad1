use thiserror::Error;

use crate::InnerProduct;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("field order {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {order} exceeds the supported maximum of {max}")]
    FieldTooLarge { order: u64, max: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("element {value} is out of range for GF({order})")]
    ElementOutOfRange { value: u64, order: u32 },
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("GF({field}) is not a quadratic extension of GF({base})")]
    NotQuadraticExtension { field: u32, base: u32 },
    #[error("GF({0}) has no quadratic subfield (odd extension degree)")]
    NoQuadraticSubfield(u32),
    #[error("{0} does not lie in the fixed subfield")]
    NotInSubfield(u32),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not skew-symmetric with zero diagonal")]
    NotSkewSymmetric,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("symplectic form needs an even length, got {0}")]
    OddLength(usize),
    #[error("code is not {inner} LCD (hull dimension {hull_dimension}, need 0)")]
    NotLcd {
        inner: InnerProduct,
        hull_dimension: usize,
    },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("enumeration budget exceeded: {requested} items requested, cap is {cap}")]
    BudgetExceeded { requested: String, cap: String },
    #[error("tolerance must be positive")]
    NonPositiveTolerance,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
