use thiserror::Error;

use crate::exactnum::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent vector has length {found}, ring has {expected} variables")]
    LengthMismatch { expected: usize, found: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("monomial order {0} is not degree-compatible")]
    OrderNotDegreeCompatible(String),
    #[error("ideal is not generated by monomials")]
    NonMonomial,
    #[error("quotient has Krull dimension {0}, expected 0")]
    PositiveDimension(usize),
    #[error("not a system of parameters: {0}")]
    NotASop(String),
    #[error("method not valid for this input: {0}")]
    InvalidMethod(String),
    #[error("inexact division: remainder is nonzero")]
    InexactDivision,
    #[error("containment failure: {0}")]
    Containment(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("search exhausted after {0} attempts")]
    Exhausted(usize),
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
