//! Exact arithmetic substrate: rationals, polynomials, graded bases and sparse rank.

pub mod graded;
pub mod parse;
pub mod poly;
pub mod sparse;

pub use crate::error::CoreError;
pub use graded::{combinations, graded_slice, BasisElement, GradedBasis, SpaceDescriptor};
pub use parse::parse_poly;
pub use poly::{monomial_count, monomials_of_degree, poly_arith, Monomial, Poly, PolyOp, Variables};
pub use sparse::{SparseMatrix, DENSE_COLUMN_THRESHOLD};

/// The ground field.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `p` or `p/q` with integer `p, q`.
pub fn parse_rational(text: &str) -> Result<Rational, CoreError> {
    text.trim().parse::<Rational>().map_err(|e| CoreError::Syntax { position: 0, message: format!("bad rational {text:?}: {e}") })
}
