//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by matrix construction, factorization, expansion and I/O.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("entry ({row}, {col}) outside matrix of order {order}")]
    IndexOutOfRange { row: usize, col: usize, order: usize },

    #[error("non-finite value at ({row}, {col})")]
    NonFiniteValue { row: usize, col: usize },

    #[error("matrix orders differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("partition ends at {end} but matrix order is {order}")]
    PartitionMismatch { end: usize, order: usize },

    #[error("invalid partition offsets: {0}")]
    InvalidPartition(String),

    #[error("entry ({row}, {col}) couples different blocks of a supposedly block-diagonal matrix")]
    NotBlockDiagonal { row: usize, col: usize },

    #[error("block {block} is numerically singular (pivot magnitude {pivot:.3e})")]
    SingularBlock { block: usize, pivot: f64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unsupported Matrix Market format: {0}")]
    UnsupportedFormat(String),

    #[error("zero or missing diagonal entry at index {0}")]
    ZeroDiagonal(usize),

    #[error("spectral radius estimate {0} is not below one")]
    RhoNotLessThanOne(f64),

    #[error("smallest eigenvalue {0} is not above -1")]
    EigenvalueBelowMinusOne(f64),

    #[error("inconsistent spectrum: rho {rho} below |lambda_min| {lambda_min}")]
    SpectrumInconsistent { rho: f64, lambda_min: f64 },

    #[error("power accumulator holds {nnz} non-zeros, over the budget of {budget}")]
    MemoryBudgetExceeded { nnz: usize, budget: usize },

    #[error("matrix is not Hermitian within tolerance")]
    NotHermitian,

    #[error("matrix is not positive-definite")]
    NotPositiveDefinite,

    #[error("Cholesky breakdown at index {0}: matrix is not positive-definite on its pattern")]
    CholeskyBreakdown(usize),

    #[error("tridiagonal Toeplitz eigenvalue {0} is not positive")]
    NonPositiveEigenvalue(f64),

    #[error("order {order} exceeds the brute-force limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("matrix is numerically singular")]
    SingularMatrix,

    #[error("order {order} exceeds the dense cap {cap}")]
    DenseCapExceeded { order: usize, cap: usize },

    #[error("odd-power trace at order {order} has magnitude {magnitude:.3e}, violating the checkerboard structure")]
    CheckerboardTraceNonzero { order: usize, magnitude: f64 },

    #[error("eigensolver failed to converge")]
    ConvergenceFailed,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
