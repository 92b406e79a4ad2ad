//! Exact arithmetic in the coefficient field Q(q).
//!
//! [`QPolynomial`] is a univariate polynomial in q with rational
//! coefficients, stored as a rational content times a primitive integer
//! polynomial so that products need no re-normalization and gcds run over
//! the integers. [`QRationalFunction`] is a normalized quotient of two such
//! polynomials; normal forms are unique, so equality is structural.
//!
//! [`scalars`] builds the q-combinatorial quantities on top: Heine basic
//! numbers [n]_{q^a}, q-factorials, q-binomial coefficients, and the
//! logarithmic expansion coefficients c_k(q^a) of the Jackson
//! q-exponential.

mod poly;
mod ratfunc;
mod scalars;

pub use num_rational::BigRational;

pub use poly::QPolynomial;
pub use ratfunc::QRationalFunction;
pub use scalars::{c_coeff, q_binomial, q_factorial, q_number};

use num_bigint::BigInt;

/// Convenience constructor for an exact rational p/q.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Convenience constructor for an exact integer rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}
