use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Dense exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_add(b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial(out))
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(b)?);
        }
        Some(Monomial(out))
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for &a in &self.0 {
            out.push(a.checked_mul(e).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial(out))
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Supported monomial orders. `Block(k)` compares the first `k` variables by
/// grevlex and breaks ties by grevlex on the rest, so it eliminates the
/// first `k` variables.
///
/// `NegDegrevlex` is a local order: lower total degree is larger, ties are
/// broken as in grevlex. It is not a well-order and is only accepted by the
/// truncated Gröbner engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    Deglex,
    Block(usize),
    NegDegrevlex,
}

impl MonomialOrder {
    /// Whether every monomial is larger than 1.
    pub fn is_global(&self) -> bool {
        !matches!(self, MonomialOrder::NegDegrevlex)
    }

    /// Whether higher total degree always means a larger monomial.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex | MonomialOrder::Deglex) || matches!(self, MonomialOrder::Block(0))
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Deglex => "deglex".into(),
            MonomialOrder::Block(k) => format!("block({k})"),
            MonomialOrder::NegDegrevlex => "negdegrevlex".into(),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Compares two monomials; unchecked lengths, see [`compare`] for the checked form.
#[inline]
pub(crate) fn cmp_monomials(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Ordering {
    let (a, b) = (a.exponents(), b.exponents());
    match ord {
        MonomialOrder::Lex => a.cmp(b),
        MonomialOrder::Grevlex => grevlex(a, b),
        MonomialOrder::Deglex => {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| a.cmp(b))
        }
        MonomialOrder::Block(k) => {
            let k = k.min(a.len());
            grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
        }
        MonomialOrder::NegDegrevlex => {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| grevlex(a, b))
        }
    }
}

pub fn compare(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::LengthMismatch {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    Ok(cmp_monomials(a, b, ord))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn lex_prefers_earlier_variables() {
        assert_eq!(
            compare(&m(&[1, 0]), &m(&[0, 1]), MonomialOrder::Lex).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            compare(&m(&[1, 0]), &m(&[0, 5]), MonomialOrder::Lex).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_tie_break() {
        // x^2 y vs x y^2: same degree, smaller power of the last variable wins
        assert_eq!(
            compare(&m(&[2, 1]), &m(&[1, 2]), MonomialOrder::Grevlex).unwrap(),
            Ordering::Greater
        );
        // x y z^0 ... classic: x*z vs y^2 in 3 vars -> y^2 bigger under grevlex
        assert_eq!(
            compare(&m(&[1, 0, 1]), &m(&[0, 2, 0]), MonomialOrder::Grevlex).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            compare(&m(&[1, 0, 1]), &m(&[0, 2, 0]), MonomialOrder::Deglex).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn equal_iff_same_vector() {
        for ord in [
            MonomialOrder::Lex,
            MonomialOrder::Grevlex,
            MonomialOrder::Deglex,
            MonomialOrder::Block(1),
        ] {
            assert_eq!(compare(&m(&[1, 2, 3]), &m(&[1, 2, 3]), ord).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn block_eliminates_first_variables() {
        // u > anything free of u regardless of degree
        let u = m(&[1, 0, 0]);
        let big = m(&[0, 7, 7]);
        assert_eq!(compare(&u, &big, MonomialOrder::Block(1)).unwrap(), Ordering::Greater);
    }

    #[test]
    fn length_mismatch() {
        assert!(compare(&m(&[1]), &m(&[1, 0]), MonomialOrder::Lex).is_err());
    }

    #[test]
    fn divisibility_and_lcm() {
        assert!(m(&[1, 1]).divides(&m(&[2, 1])));
        assert!(!m(&[0, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[2, 0, 1]).lcm(&m(&[1, 3, 0])), m(&[2, 3, 1]));
        assert_eq!(m(&[2, 1]).div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert_eq!(m(&[0, 1]).div(&m(&[1, 0])), None);
    }
}
