use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix has zero rows or columns")]
    Empty,

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid subsystem dimensions {dims:?} for size {size}")]
    InvalidDims { dims: Vec<usize>, size: usize },

    #[error("invalid subsystem selection: {0}")]
    InvalidSubsystem(String),

    #[error("matrix is not Hermitian: max |M - M^dagger| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("trace is {trace}, expected 1")]
    TraceNotOne { trace: f64 },

    #[error("matrix is not positive semidefinite: smallest eigenvalue {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("state vector is not normalized: norm {norm}")]
    NotNormalized { norm: f64 },

    #[error("Kronecker product size overflows usize")]
    SizeOverflow,

    #[error("matrix is not orthogonal: max |O^T O - I| = {deviation:e}")]
    NotOrthogonal { deviation: f64 },

    #[error("matrix is not unitary: max |U^dagger U - I| = {deviation:e}")]
    NotUnitary { deviation: f64 },

    #[error("Kraus operators are not complete: max |sum K^dagger K - I| = {residual:e}")]
    IncompleteChannel { residual: f64 },

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("Bell-diagonal parameters give a negative eigenvalue: beta = {betas:?}")]
    InvalidBellParameters { betas: [f64; 4] },

    #[error("invalid Schmidt coefficients: {0}")]
    InvalidSchmidt(String),

    #[error("invalid generator basis: {0}")]
    InvalidBasis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
