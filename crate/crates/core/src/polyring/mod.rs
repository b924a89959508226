//! Multivariate polynomials over a [`FieldConfig`](crate::exactnum::FieldConfig)
//! with dense exponent vectors and pluggable monomial orders.

mod monomial;
mod parse;
mod poly;
mod ring;

pub use monomial::{compare, Monomial, MonomialOrder};
pub use parse::{parse_polynomial, parse_polynomial_at};
pub use poly::{Polynomial, Term};
pub use ring::{Limits, Ring, RingContext, DEFAULT_GB_DEGREE_CAP, DEFAULT_LOCAL_N_CAP};

pub(crate) use monomial::cmp_monomials;
pub(crate) use poly::add_scaled;
