use thiserror::Error;

/// Errors raised by the tridiagonal toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix order must be at least 1")]
    EmptyMatrix,

    #[error(
        "band lengths do not describe a tridiagonal matrix: diag has {diag} entries, \
         sub has {sub}, sup has {sup}"
    )]
    BandLength { diag: usize, sub: usize, sup: usize },

    #[error("non-finite entry in `{band}` at index {index}")]
    NonFinite { band: &'static str, index: usize },

    #[error("order {order} exceeds the coefficient-form bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },

    #[error("order {order} is below the minimum {min} for this operation")]
    OrderTooSmall { order: usize, min: usize },

    #[error("parameter `{name}` must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },

    #[error("product b*c must be positive for a real closed-form spectrum, got {0}")]
    NonPositiveProduct(f64),

    /// `index` is the 1-based column `i` of the vanishing entry `m[i+1, i]`.
    #[error("subdiagonal entry m[{row}, {index}] is zero", row = .index + 1)]
    ZeroSubdiagonal { index: usize },

    #[error("off-diagonal product sub*sup at position {index} is not positive ({product})")]
    IndefiniteProduct { index: usize, product: f64 },

    #[error("{x} is not an eigenvalue: residual {residual:.3e} exceeds {tolerance:.3e}")]
    NotAnEigenvalue {
        x: f64,
        residual: f64,
        tolerance: f64,
    },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("Chebyshev second-kind index {0} is below -1")]
    ChebyshevIndex(i64),

    #[error("invalid table algebra parameters: {0}")]
    InvalidSpec(String),

    #[error("L-row recurrence overflowed at entry {index}")]
    Overflow { index: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
