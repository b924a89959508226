//! Exact scalars: rationals and elements of a simple number field `Q[t]/(f)`.

mod field;
mod rational;
pub(crate) mod upoly;

pub use field::{cyclotomic_polynomial, Coeff, FieldConfig, FieldElem, FieldKind};
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible: its gcd with the modulus is {gcd}, so the modulus is not irreducible")]
    NonInvertible { gcd: String },
    #[error("operands belong to different coefficient fields")]
    FieldMismatch,
    #[error("modulus must be monic of degree at least 1")]
    BadModulus,
    #[error("cannot parse rational literal `{0}`")]
    Parse(String),
}
