//! Exact commutative-algebra engine for symbolic powers and multiplicities.
//!
//! The crate builds up from exact scalars ([`exactnum`]) and polynomials
//! ([`polyring`]) to reduced Gröbner bases ([`groebner`]), ideal operations
//! ([`idealops`]) and Hilbert series ([`hilbert`]). On top of those sit
//! symbolic powers ([`symbolic`]), the built-in ideal families
//! ([`families`]), the multiplicity criterion and its companions
//! ([`criterion`]) and a linear system-of-parameters search ([`sopfinder`]).

pub mod criterion;
pub mod error;
pub mod exactnum;
pub mod families;
pub mod groebner;
pub mod hilbert;
pub mod idealops;
pub mod polyring;
pub mod sopfinder;
pub mod symbolic;

pub use error::{Error, Result};
pub use exactnum::{FieldConfig, FieldElem, Rational};
pub use idealops::Ideal;
pub use polyring::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Ring, RingContext};
