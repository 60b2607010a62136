//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    EmptyDimension { rows: usize, cols: usize },

    #[error("entry count {got} does not match shape {rows}x{cols}")]
    EntryCount { rows: usize, cols: usize, got: usize },

    #[error("shape mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols} for {op}")]
    ShapeMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular (rank {rank} of {size})")]
    Singular { rank: usize, size: usize },

    #[error("matrix is not positive definite (failed at row {row})")]
    NotPositiveDefinite { row: usize },

    #[error("non-finite entry rejected: {0}")]
    NotFinite(String),

    #[error("cannot parse entry {0:?}")]
    EntryParse(String),

    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),

    #[error("base dimension must be at least 1")]
    ZeroBase,

    #[error("insertion position {position} out of range 1..={width}")]
    InsertionOutOfRange { position: usize, width: usize },

    #[error("duplicate insertion position {0}")]
    DuplicateInsertion(usize),

    #[error("row {index} sums to {sum}, expected zero")]
    RowSumNonzero { index: usize, sum: String },

    #[error("column {index} sums to {sum}, expected zero")]
    ColSumNonzero { index: usize, sum: String },

    #[error("declared zero row {index} has nonzero entry in column {col}")]
    InsertedRowNonzero { index: usize, col: usize },

    #[error("declared zero column {index} has nonzero entry in row {row}")]
    InsertedColNonzero { index: usize, row: usize },

    #[error("matrix too small to carry insertions: {rows}x{cols} with {ins_rows} zero rows and {ins_cols} zero columns")]
    TooSmallForInsertions {
        rows: usize,
        cols: usize,
        ins_rows: usize,
        ins_cols: usize,
    },

    #[error("compressed matrix has rank {rank}, method requires full rank {need}; use the cholesky method instead")]
    RankDeficient { rank: usize, need: usize },

    #[error("member is {rows}x{cols}, method requires a square member")]
    MemberNotSquare { rows: usize, cols: usize },

    #[error("member carries insertions, method requires none")]
    HasInsertions,

    #[error("matrix is not left-invertible (rank {rank} of {cols} columns)")]
    NotLeftInvertible { rank: usize, cols: usize },

    #[error("matrix is not right-invertible (rank {rank} of {rows} rows)")]
    NotRightInvertible { rank: usize, rows: usize },

    #[error("row and column operators have different base dimensions ({row_base} vs {col_base})")]
    BaseMismatch { row_base: usize, col_base: usize },

    #[error("operator mismatch: expected insertions {expected:?}, got {got:?}")]
    OperatorMismatch {
        expected: Vec<usize>,
        got: Vec<usize>,
    },

    #[error("limit schedule must be strictly decreasing and positive")]
    BadSchedule,

    #[error("limit sweep did not converge; successive differences {diffs:?}")]
    NonConvergence { diffs: Vec<f64> },

    #[error("projector cross-check failed: direct X+X disagrees with the closed form")]
    ProjectorMismatch,
}
