//! Exact disentangling of exponentials and Jackson q-exponentials of two
//! noncommuting operators into Zassenhaus-type infinite products.
//!
//! Everything is computed symbolically over the rational-function field Q(q)
//! at an explicit truncation degree; no floating point enters except for the
//! corroborative root-of-unity checks in [`series`]. The crate is organized as
//!
//! - [`field`] — the coefficient field Q(q): big rationals, polynomials in q,
//!   normalized rational functions, and the q-combinatorial scalars
//!   ([n]_q, [n]_q!, q-binomials, the log-expansion coefficients c_k).
//! - [`algebra`] — the free associative algebra on two generators A, B with
//!   degree-truncated products, exp/log/inverse series calculus, Jackson
//!   q-exponentials of operator arguments, a q-commutator expression tree,
//!   and q-plane normal-form rewriting.
//! - [`disentangle`] — the generators: classical BCH terms, classical
//!   Zassenhaus terms, and the q-Zassenhaus peeling engine for arbitrary
//!   base schedules, together with a catalog of closed-form factor formulas.
//! - [`series`] — commutative truncated power series in z over Q(q) and the
//!   q-exponential identity verifier.
//! - [`oracle`] — exact rational matrix arithmetic over nilpotent
//!   representations, confirming the factorizations without truncation
//!   caveats.
//! - [`verify`] — the reportable verification suites driven by the CLI.

pub mod algebra;
pub mod disentangle;
pub mod field;
pub mod oracle;
pub mod report;
pub mod series;
pub mod verify;

mod error;

pub use error::{Error, Result};
pub use field::{BigRational, QPolynomial, QRationalFunction};
