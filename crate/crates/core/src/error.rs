use thiserror::Error;

use crate::polyring::Domain;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch { left: Domain, right: Domain },
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("invalid prime-field modulus {0}")]
    InvalidModulus(u64),
    #[error("coefficient {0} is not in the coefficient domain")]
    CoefficientNotInDomain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not invertible in the integers")]
    NotInvertible(String),
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("polynomial is not homogeneous of degree {expected}")]
    NotHomogeneous { expected: u32 },
    #[error("matrix size {size} exceeds the supported maximum {max}")]
    SizeExceeded { size: usize, max: usize },
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("matrix has odd size {0}")]
    OddSize(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("no primitive {d}-th root of unity supplied or available in {domain}")]
    MissingRootOfUnity { d: u64, domain: Domain },
    #[error("{0} is not a primitive root of unity of the requested order")]
    NotPrimitiveRoot(String),
    #[error("characteristic {characteristic} divides the covering degree {d}")]
    CharacteristicDividesDegree { characteristic: u64, d: u64 },
    #[error("entry degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("operation requires a field, got {0}")]
    RequiresField(Domain),
    #[error("operation requires the integers, got {0}")]
    RequiresIntegers(Domain),
    #[error("characteristic 2 is not supported here")]
    CharacteristicTwo,
    #[error("input does not have the expected shape: {0}")]
    UnrecognizedShape(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
