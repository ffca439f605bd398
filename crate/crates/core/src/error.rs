use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("negative exponent at position {position}")]
    NegativeExponent { position: usize },
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },
    #[error("expected {expected} operand(s), got {got}")]
    Arity { expected: usize, got: usize },
    #[error("bracket matrix is not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("bracket entry ({i}, {j}) = {entry} is not homogeneous of degree {degree}")]
    NotHomogeneous { i: usize, j: usize, entry: String, degree: u32 },
    #[error("Jacobi identity fails on ({i}, {j}, {k}): jacobiator = {jacobiator}")]
    JacobiFailure { i: usize, j: usize, k: usize, jacobiator: String },
    #[error("module is not flat: curvature on ({i}, {j}) is nonzero")]
    NotFlat { i: usize, j: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid weight window [{lo}, {hi}]")]
    InvalidWindow { lo: i64, hi: i64 },
    #[error("invalid finite algebra: {0}")]
    InvalidAlgebra(String),
    #[error("module compatibility check failed: {0}")]
    Compatibility(String),
}
