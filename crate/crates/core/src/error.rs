use thiserror::Error;

/// Errors raised by exact Golden-calculus computations.
///
/// Variants marked "internal" signal a broken arithmetic invariant rather
/// than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("fibonomial [{n} choose {k}]_F requires k <= n")]
    FibonomialRange { n: usize, k: usize },

    #[error("Pascal recursion for [{n} choose {k}]_F requires 1 <= k <= n-1")]
    PascalRange { n: usize, k: usize },

    #[error("internal: inexact division {numerator} / {denominator}")]
    InexactDivision {
        numerator: String,
        denominator: String,
    },

    #[error("internal: {context} left a nonzero sqrt(5) component {value}")]
    IrrationalResidue { context: String, value: String },

    #[error("internal: {context} is not divisible by x")]
    NotDivisibleByX { context: String },

    #[error("series has a non-invertible constant term")]
    NonInvertibleConstant,

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
