use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::{Coeff, FieldConfig, FieldElem, Rational};

use super::monomial::cmp_monomials;
use super::{Monomial, MonomialOrder, Ring};

pub type Term = (Monomial, Coeff);

/// Multivariate polynomial. Terms are sorted strictly descending under the
/// ring's order and never carry a zero coefficient.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

/// `a + c·m·b` for term lists sorted descending under `ord`.
pub(crate) fn add_scaled(
    field: &FieldConfig,
    ord: MonomialOrder,
    a: &[Term],
    b: &[Term],
    c: &Coeff,
    m: &Monomial,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut pending: Option<Monomial> = None;
    while i < a.len() || j < b.len() {
        if j < b.len() && pending.is_none() {
            pending = Some(b[j].0.mul(m));
        }
        let Some(bm) = pending.as_ref() else {
            out.extend_from_slice(&a[i..]);
            break;
        };
        if i >= a.len() {
            out.push((pending.take().unwrap(), field.mul(c, &b[j].1)));
            j += 1;
            continue;
        }
        match cmp_monomials(&a[i].0, bm, ord) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((pending.take().unwrap(), field.mul(c, &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let s = field.add(&a[i].1, &field.mul(c, &b[j].1));
                if !s.is_zero() {
                    out.push((pending.take().unwrap(), s));
                } else {
                    pending = None;
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_int(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, ring.field().from_int(n))
    }

    pub fn from_rational(ring: &Ring, q: Rational) -> Self {
        Self::constant(ring, ring.field().from_rational(q))
    }

    pub fn term(ring: &Ring, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    pub fn monomial(ring: &Ring, m: Monomial) -> Self {
        Self::term(ring, m, ring.field().one())
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i))
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.var_index(name)?))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Ring, terms: Vec<Term>) -> Result<Self> {
        let field = ring.field();
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::LengthMismatch {
                    expected: ring.nvars(),
                    found: m.nvars(),
                });
            }
            if c.coefficients().len() != field.degree() {
                return Err(crate::exactnum::ExactError::FieldMismatch.into());
            }
            match acc.get_mut(&m) {
                Some(e) => *e = field.add(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Ok(Self::from_map(ring, acc))
    }

    fn from_map(ring: &Ring, acc: HashMap<Monomial, Coeff>) -> Self {
        let ord = ring.order();
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| cmp_monomials(&b.0, &a.0, ord));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusts the caller that `terms` is canonical for `ring`.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| cmp_monomials(&w[0].0, &w[1].0, ring.order()) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coefficient(&self) -> Option<FieldElem> {
        self.leading_coeff()
            .map(|c| FieldElem::new(self.ring.field(), c.clone()))
    }

    /// Highest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// Lowest total degree of a term; `None` for zero.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).min()
    }

    /// `(true, Some(d))` when every term has degree `d`. The zero polynomial
    /// counts as homogeneous of undefined degree: `(true, None)`.
    pub fn is_homogeneous(&self) -> (bool, Option<u32>) {
        let Some(d) = self.terms.first().map(|t| t.0.degree()) else {
            return (true, None);
        };
        if self.terms.iter().all(|t| t.0.degree() == d) {
            (true, Some(d))
        } else {
            (false, None)
        }
    }

    pub fn homogeneous_degree(&self) -> Option<u32> {
        self.is_homogeneous().1
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let one = Monomial::one(self.ring.nvars());
        let f = self.ring.field();
        Ok(Self::from_sorted_terms(
            &self.ring,
            add_scaled(f, self.ring.order(), &self.terms, &other.terms, &f.one(), &one),
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let one = Monomial::one(self.ring.nvars());
        let f = self.ring.field();
        let m1 = f.from_int(-1);
        Ok(Self::from_sorted_terms(
            &self.ring,
            add_scaled(f, self.ring.order(), &self.terms, &other.terms, &m1, &one),
        ))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let f = self.ring.field();
        if other.terms.len() == 1 {
            return Ok(self.mul_term(&other.terms[0].0, &other.terms[0].1));
        }
        if self.terms.len() == 1 {
            return Ok(other.mul_term(&self.terms[0].0, &self.terms[0].1));
        }
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                let c = f.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = f.add(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_map(&self.ring, acc))
    }

    pub fn neg(&self) -> Self {
        let f = self.ring.field();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect();
        Self::from_sorted_terms(&self.ring, terms)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let f = self.ring.field();
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), f.mul(x, c))).collect();
        Self::from_sorted_terms(&self.ring, terms)
    }

    /// Multiplication by a single term; order is preserved since monomial
    /// orders are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let f = self.ring.field();
        let terms = self.terms.iter().map(|(x, y)| (x.mul(m), f.mul(y, c))).collect();
        Self::from_sorted_terms(&self.ring, terms)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(x, y)| (x.mul(m), y.clone())).collect();
        Self::from_sorted_terms(&self.ring, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the leading coefficient is 1.
    pub fn make_monic(&self) -> Result<Self> {
        match self.leading_coeff() {
            None => Ok(self.clone()),
            Some(c) if self.ring.field().is_one(c) => Ok(self.clone()),
            Some(c) => Ok(self.scale(&self.ring.field().inv(c)?)),
        }
    }

    /// Whether `x_i` occurs in any term.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.0.exponent(i) > 0)
    }

    /// Simultaneous substitution `x_i -> q_i`.
    pub fn substitute(&self, assignments: &[(usize, Polynomial)]) -> Result<Self> {
        let n = self.ring.nvars();
        let mut table: Vec<Option<&Polynomial>> = vec![None; n];
        for (i, q) in assignments {
            if *i >= n {
                return Err(Error::UnknownVariable(format!("#{i}")));
            }
            self.check(q)?;
            table[*i] = Some(q);
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut kept = Monomial::one(n);
            let mut factor = Self::constant(&self.ring, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match table[i] {
                    Some(q) => {
                        let p = powers.entry((i, e)).or_insert_with(|| q.pow(e));
                        factor = &factor * p;
                    }
                    None => kept.exponents_mut()[i] = e,
                }
            }
            out = &out + &factor.mul_monomial(&kept);
        }
        Ok(out)
    }

    /// Substitution keyed by variable name.
    pub fn substitute_named(&self, assignments: &[(&str, Polynomial)]) -> Result<Self> {
        let mut idx = Vec::with_capacity(assignments.len());
        for (name, q) in assignments {
            idx.push((self.ring.var_index(name)?, q.clone()));
        }
        self.substitute(&idx)
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        if i >= self.ring.nvars() {
            return Err(Error::UnknownVariable(format!("#{i}")));
        }
        let f = self.ring.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.exponents_mut()[i] = e - 1;
            let dc = f.mul(c, &f.from_int(e as i64));
            if !dc.is_zero() {
                terms.push((dm, dc));
            }
        }
        Ok(Self::from_sorted_terms(&self.ring, terms))
    }

    pub fn derivative_by_name(&self, name: &str) -> Result<Self> {
        self.partial_derivative(self.ring.var_index(name)?)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// `target` variable `var_map[i]`. Fields must agree.
    pub fn map_into(&self, target: &Ring, var_map: &[usize]) -> Result<Self> {
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        if var_map.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.ring.nvars(),
                found: var_map.len(),
            });
        }
        let nt = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut tm = Monomial::one(nt);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let j = *var_map.get(i).filter(|&&j| j < nt).ok_or(Error::RingMismatch)?;
                    tm.exponents_mut()[j] += e;
                }
            }
            terms.push((tm, c.clone()));
        }
        let mut terms = terms;
        let ord = target.order();
        terms.sort_unstable_by(|a, b| cmp_monomials(&b.0, &a.0, ord));
        Ok(Self::from_sorted_terms(target, terms))
    }

    /// Same polynomial under another order of the same variables.
    pub fn reorder(&self, target: &Ring) -> Result<Self> {
        if !self.ring.compatible(target) {
            return Err(Error::RingMismatch);
        }
        let mut terms = self.terms.clone();
        let ord = target.order();
        terms.sort_unstable_by(|a, b| cmp_monomials(&b.0, &a.0, ord));
        Ok(Self::from_sorted_terms(target, terms))
    }

    /// Exact quotient `self / g`, failing when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        self.check(g)?;
        let Some((gm, gc)) = g.terms.first() else {
            return Err(Error::Exact(crate::exactnum::ExactError::DivisionByZero));
        };
        let f = self.ring.field();
        let ord = self.ring.order();
        let ginv = f.inv(gc)?;
        let mut rem = self.terms.clone();
        let mut quot: Vec<Term> = Vec::new();
        while let Some((m, c)) = rem.first().cloned() {
            let q = m.div(gm).ok_or(Error::InexactDivision)?;
            let qc = f.mul(&c, &ginv);
            rem = add_scaled(f, ord, &rem[1..], &g.terms[1..], &f.neg(&qc), &q);
            quot.push((q, qc));
        }
        Ok(Self::from_sorted_terms(&self.ring, quot))
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|t| &t.0 == m)
            .map(|t| t.1.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// Evaluates with every variable set to zero.
    pub fn constant_term(&self) -> Coeff {
        self.coefficient_of(&Monomial::one(self.ring.nvars()))
    }

    pub fn monomial_string(&self, m: &Monomial) -> String {
        format_monomial(self.ring.var_names(), m)
    }
}

pub(crate) fn format_monomial(names: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{e}", names[i])),
        }
    }
    parts.join("*")
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mono = format_monomial(self.ring.var_names(), m);
            match c.as_rational() {
                Some(q) => {
                    let neg = q.is_negative();
                    let abs = if neg { q.neg() } else { q.clone() };
                    match (k == 0, neg) {
                        (true, true) => f.write_str("-")?,
                        (true, false) => {}
                        (false, true) => f.write_str(" - ")?,
                        (false, false) => f.write_str(" + ")?,
                    }
                    if mono.is_empty() {
                        write!(f, "{abs}")?;
                    } else if abs.is_one() {
                        f.write_str(&mono)?;
                    } else {
                        write!(f, "{abs}*{mono}")?;
                    }
                }
                None => {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "({})", field.format(c))?;
                    if !mono.is_empty() {
                        write!(f, "*{mono}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator forms panic on ring mismatch; the named methods return errors.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::try_add(self, rhs).expect("ring mismatch in +")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::try_sub(self, rhs).expect("ring mismatch in -")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::try_mul(self, rhs).expect("ring mismatch in *")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, RingContext};

    fn ring() -> Ring {
        RingContext::rational(&["x", "y", "z", "w"])
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn fermat_binomials_cancel() {
        let r = ring();
        let sum = &(&p(&r, "y^3 - z^3") + &p(&r, "z^3 - x^3")) + &p(&r, "x^3 - y^3");
        assert!(sum.is_zero());
    }

    #[test]
    fn product_expansion() {
        let r = ring();
        let prod = &p(&r, "x + y") * &p(&r, "x + y + z");
        assert_eq!(prod, p(&r, "x^2 + 2*x*y + y^2 + x*z + y*z"));
        assert!((&prod * &Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn homogeneity() {
        let r = ring();
        assert_eq!(p(&r, "x*y + x*z + y*z").is_homogeneous(), (true, Some(2)));
        assert_eq!(p(&r, "x^2 + y").is_homogeneous(), (false, None));
        assert_eq!(Polynomial::zero(&r).is_homogeneous(), (true, None));
    }

    #[test]
    fn jacobian_partials() {
        let r = ring();
        let f = p(&r, "w*(x+y)*(x+y+z+w)");
        assert_eq!(f.derivative_by_name("z").unwrap(), p(&r, "x*w + y*w"));
        assert_eq!(
            f.derivative_by_name("w").unwrap(),
            p(&r, "x^2 + 2*x*y + y^2 + x*z + y*z + 2*x*w + 2*y*w")
        );
        let fx = f.derivative_by_name("x").unwrap();
        let fy = f.derivative_by_name("y").unwrap();
        assert!((&fx - &fy).is_zero());
        assert!(Polynomial::from_int(&r, 5).derivative_by_name("x").unwrap().is_zero());
        assert!(matches!(f.derivative_by_name("q"), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn substitution() {
        let r = ring();
        let zero = Polynomial::zero(&r);
        let g = p(&r, "w*(z+w)")
            .substitute_named(&[("x", zero.clone()), ("z", zero)])
            .unwrap();
        assert_eq!(g, p(&r, "w^2"));
        let x = Polynomial::var(&r, 0);
        assert!(p(&r, "x - y").substitute_named(&[("y", x)]).unwrap().is_zero());
        assert!(p(&r, "x").substitute_named(&[("q", Polynomial::zero(&r))]).is_err());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = ring();
        let b = RingContext::rational(&["x", "y"]);
        assert_eq!(
            Polynomial::var(&a, 0).try_add(&Polynomial::var(&b, 0)),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let q = p(&r, "x^2*y + x*y^2").exact_div(&p(&r, "x + y")).unwrap();
        assert_eq!(q, p(&r, "x*y"));
        assert_eq!(p(&r, "x^2 + 1").exact_div(&p(&r, "x")), Err(Error::InexactDivision));
    }

    #[test]
    fn display_is_canonical() {
        let r = ring();
        assert_eq!(p(&r, "-(x+y)^2 + 1/2").to_string(), "-x^2 - 2*x*y - y^2 + 1/2");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }
}
