use std::fmt;
use std::sync::Arc;

use smallvec::{smallvec, SmallVec};

use super::upoly;
use super::{ExactError, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Rationals,
    NumberField,
}

/// Coefficient field: `Q`, or `Q[t]/(modulus)` for a monic modulus whose
/// irreducibility the caller asserts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldConfig {
    /// Monic modulus, lowest degree first; `None` for the rationals.
    modulus: Option<Vec<Rational>>,
    generator: String,
}

/// Raw field element: coefficients of `1, t, ..., t^{d-1}`.
///
/// Carries no field reference; polynomials store these and route all
/// arithmetic through their ring's [`FieldConfig`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coeff(SmallVec<[Rational; 1]>);

impl Coeff {
    pub fn coefficients(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    /// The element as a rational, if it lies in the prime field.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.0[1..].iter().all(Rational::is_zero) {
            Some(&self.0[0])
        } else {
            None
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl FieldConfig {
    pub fn rationals() -> Arc<Self> {
        Arc::new(FieldConfig {
            modulus: None,
            generator: "t".into(),
        })
    }

    /// `Q[gen]/(modulus)`; `modulus` is given lowest degree first and must be monic.
    pub fn number_field(modulus: Vec<Rational>, generator: &str) -> Result<Arc<Self>, ExactError> {
        let mut m = modulus;
        upoly::trim(&mut m);
        if m.len() < 2 || !m.last().unwrap().is_one() {
            return Err(ExactError::BadModulus);
        }
        Ok(Arc::new(FieldConfig {
            modulus: Some(m),
            generator: generator.to_string(),
        }))
    }

    /// `Q(t)` with `t` a primitive `n`-th root of unity.
    pub fn cyclotomic(n: u32) -> Arc<Self> {
        Self::number_field(cyclotomic_polynomial(n), "t").expect("cyclotomic polynomials are monic")
    }

    pub fn kind(&self) -> FieldKind {
        if self.modulus.is_some() {
            FieldKind::NumberField
        } else {
            FieldKind::Rationals
        }
    }

    pub fn degree(&self) -> usize {
        self.modulus.as_ref().map_or(1, |m| m.len() - 1)
    }

    pub fn modulus(&self) -> Option<&[Rational]> {
        self.modulus.as_deref()
    }

    pub fn generator_name(&self) -> &str {
        &self.generator
    }

    pub fn zero(&self) -> Coeff {
        Coeff(smallvec![Rational::zero(); self.degree()])
    }

    pub fn one(&self) -> Coeff {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, q: Rational) -> Coeff {
        let mut c = self.zero();
        c.0[0] = q;
        c
    }

    pub fn from_int(&self, n: i64) -> Coeff {
        self.from_rational(Rational::from_int(n))
    }

    /// The generator `t`; in `Q` this fails since there is none.
    pub fn generator(&self) -> Option<Coeff> {
        self.modulus.as_ref()?;
        let d = self.degree();
        Some(self.reduce(vec_with_one_at(1, d.max(2))))
    }

    /// Element with the given coefficients of `1, t, t^2, ...`, reduced mod the modulus.
    pub fn from_coefficients(&self, cs: Vec<Rational>) -> Coeff {
        self.reduce(cs)
    }

    fn reduce(&self, mut cs: Vec<Rational>) -> Coeff {
        let d = self.degree();
        if let Some(m) = &self.modulus {
            upoly::trim(&mut cs);
            while cs.len() > d {
                let top = cs.pop().unwrap();
                if top.is_zero() {
                    continue;
                }
                let base = cs.len() - d;
                for (i, mc) in m.iter().enumerate().take(d) {
                    cs[base + i] = cs[base + i].sub(&top.mul(mc));
                }
            }
        } else if cs.len() > 1 {
            debug_assert!(cs[1..].iter().all(Rational::is_zero));
            cs.truncate(1);
        }
        cs.resize(d, Rational::zero());
        Coeff(SmallVec::from_vec(cs))
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        a.is_zero()
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        a.0[0].is_one() && a.0[1..].iter().all(Rational::is_zero)
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        if a.0.len() == 1 {
            return Coeff(smallvec![a.0[0].add(&b.0[0])]);
        }
        Coeff(a.0.iter().zip(&b.0).map(|(x, y)| x.add(y)).collect())
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        if a.0.len() == 1 {
            return Coeff(smallvec![a.0[0].sub(&b.0[0])]);
        }
        Coeff(a.0.iter().zip(&b.0).map(|(x, y)| x.sub(y)).collect())
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        Coeff(a.0.iter().map(Rational::neg).collect())
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        if a.0.len() == 1 {
            return Coeff(smallvec![a.0[0].mul(&b.0[0])]);
        }
        if let Some(q) = a.as_rational() {
            return Coeff(b.0.iter().map(|y| y.mul(q)).collect());
        }
        if let Some(q) = b.as_rational() {
            return Coeff(a.0.iter().map(|x| x.mul(q)).collect());
        }
        self.reduce(upoly::mul(&a.0, &b.0))
    }

    /// Multiplicative inverse by extended Euclid against the modulus.
    pub fn inv(&self, a: &Coeff) -> Result<Coeff, ExactError> {
        if a.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let Some(m) = &self.modulus else {
            return Ok(Coeff(smallvec![a.0[0].inv()?]));
        };
        if let Some(q) = a.as_rational() {
            return Ok(self.from_rational(q.inv()?));
        }
        let (g, s) = upoly::gcd_cofactor(&a.0, m);
        if upoly::degree(&g) != Some(0) {
            let shown = FieldElem {
                field: Arc::new(self.clone()),
                coeff: self.reduce(g),
            };
            return Err(ExactError::NonInvertible { gcd: shown.to_string() });
        }
        let scale = g[0].inv()?;
        Ok(self.reduce(s.iter().map(|c| c.mul(&scale)).collect()))
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff, ExactError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Coeff, e: u32) -> Coeff {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Renders an element as a polynomial in the generator, highest power first.
    pub fn format(&self, a: &Coeff) -> String {
        let t = &self.generator;
        let mut out = String::new();
        for (i, c) in a.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let var = match i {
                0 => String::new(),
                1 => t.clone(),
                _ => format!("{t}^{i}"),
            };
            if var.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{abs}*{var}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn vec_with_one_at(i: usize, len: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[i] = Rational::one();
    v
}

/// A field element bound to its field, for standalone scalar arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElem {
    field: Arc<FieldConfig>,
    coeff: Coeff,
}

impl FieldElem {
    pub fn new(field: &Arc<FieldConfig>, coeff: Coeff) -> Self {
        assert_eq!(
            coeff.0.len(),
            field.degree(),
            "coefficient vector length must equal the field degree"
        );
        FieldElem {
            field: field.clone(),
            coeff,
        }
    }

    pub fn from_rational(field: &Arc<FieldConfig>, q: Rational) -> Self {
        FieldElem {
            field: field.clone(),
            coeff: field.from_rational(q),
        }
    }

    pub fn from_int(field: &Arc<FieldConfig>, n: i64) -> Self {
        Self::from_rational(field, Rational::from_int(n))
    }

    /// The generator `t` of a number field.
    pub fn generator(field: &Arc<FieldConfig>) -> Option<Self> {
        field.generator().map(|coeff| FieldElem {
            field: field.clone(),
            coeff,
        })
    }

    pub fn field(&self) -> &Arc<FieldConfig> {
        &self.field
    }

    pub fn coeff(&self) -> &Coeff {
        &self.coeff
    }

    pub fn into_coeff(self) -> Coeff {
        self.coeff
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    fn check(&self, other: &Self) -> Result<(), ExactError> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(ExactError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(FieldElem {
            field: self.field.clone(),
            coeff: self.field.add(&self.coeff, &other.coeff),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(FieldElem {
            field: self.field.clone(),
            coeff: self.field.sub(&self.coeff, &other.coeff),
        })
    }

    pub fn neg(&self) -> Self {
        FieldElem {
            field: self.field.clone(),
            coeff: self.field.neg(&self.coeff),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(FieldElem {
            field: self.field.clone(),
            coeff: self.field.mul(&self.coeff, &other.coeff),
        })
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        Ok(FieldElem {
            field: self.field.clone(),
            coeff: self.field.inv(&self.coeff)?,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        FieldElem {
            field: self.field.clone(),
            coeff: self.field.pow(&self.coeff, e),
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(&self.coeff))
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The `n`-th cyclotomic polynomial, lowest degree first, computed by
/// dividing `t^n - 1` by `Φ_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<Rational> {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut p = vec![Rational::zero(); n as usize + 1];
    p[0] = Rational::from_int(-1);
    p[n as usize] = Rational::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = upoly::divrem(&p, &cyclotomic_polynomial(d));
        debug_assert!(r.is_empty());
        p = q;
    }
    p
}
