use thiserror::Error;

use crate::field::BigRational;

/// Errors surfaced by the symbolic engine.
///
/// Precondition violations that callers can trip at runtime (division by
/// zero, poles, bad series constant terms, singular q-factorials) are
/// reported as values, never as panics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero in Q(q)")]
    DivisionByZero,

    #[error("denominator vanishes at q = {at}")]
    Pole { at: BigRational },

    #[error("limit q -> 1 is infinite: denominator still vanishes after cancellation")]
    InfiniteLimit,

    #[error("series argument must have zero constant term, found {found}")]
    NonzeroConstantTerm { found: String },

    #[error("series argument must have constant term 1, found {found}")]
    ConstantTermNotOne { found: String },

    #[error("cannot invert a series with zero constant term")]
    ZeroConstantTerm,

    #[error("q-binomial requires 0 <= j <= k, got k = {k}, j = {j}")]
    BinomialRange { k: u32, j: u32 },

    #[error("c_k is defined for k >= 1, got k = 0")]
    ZeroCoefficientIndex,

    #[error("matrix is not nilpotent: M^dim != 0")]
    NotNilpotent,

    #[error("[{n}] vanishes at q = {at}: base is a root of unity of relevant order")]
    VanishingQNumber { n: usize, at: BigRational },

    #[error("matrix dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("oracle requires dim <= order + 1, got dim = {dim}, order = {order}")]
    DimensionTooLarge { dim: usize, order: usize },

    #[error("unknown formula identifier `{0}`")]
    UnknownFormula(String),

    #[error("formula `{id}` requires parameter {param}")]
    MissingParameter { id: String, param: &'static str },

    #[error("formula `{id}` takes no parameter {param}")]
    UnexpectedParameter { id: String, param: &'static str },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
