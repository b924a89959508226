//! Hilbert series, degrees, Artinian lengths and local lengths at the origin.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::buchberger_truncated;
use crate::idealops::{dimension, map_down, Ideal};
use crate::polyring::{Monomial, Polynomial, Ring};

/// Univariate polynomial with integer coefficients, lowest degree first.
pub type IntPoly = Vec<i64>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn int_mul(a: &[i64], b: &[i64]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn int_add(a: &[i64], b: &[i64]) -> IntPoly {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(out)
}

/// `u^k · p`.
fn shift(p: &[i64], k: usize) -> IntPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; k];
    out.extend_from_slice(p);
    out
}

/// `1 − u^d`.
fn one_minus_power(d: u32) -> IntPoly {
    if d == 0 {
        return Vec::new();
    }
    let mut out = vec![0i64; d as usize + 1];
    out[0] = 1;
    out[d as usize] = -1;
    out
}

pub fn eval_at_one(p: &[i64]) -> i64 {
    p.iter().sum()
}

/// Quotient of `p` by `1 − u`, if exact.
fn div_one_minus_u(p: &[i64]) -> Option<IntPoly> {
    if eval_at_one(p) != 0 || p.is_empty() {
        return None;
    }
    let mut q = Vec::with_capacity(p.len() - 1);
    let mut acc = 0;
    for &c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    Some(trim(q))
}

/// Renders an integer polynomial in `u`, e.g. `1 - 3u^4 + 2u^6`.
pub fn format_int_poly(p: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in p.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        match k {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if mag != 1 {
                    out.push_str(&mag.to_string());
                }
                out.push('u');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `H(S/I, u) = h(u) / (1 − u)^n` together with its reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub nvars: usize,
    pub numerator: IntPoly,
    pub reduced_numerator: IntPoly,
    pub dimension: usize,
    pub degree: i64,
}

impl HilbertSeries {
    /// Builds the series from `h` over `(1 − u)^n`. Fails on `h = 0`.
    pub fn from_numerator(numerator: IntPoly, nvars: usize) -> Result<Self> {
        let numerator = trim(numerator);
        if numerator.is_empty() {
            return Err(Error::UnitIdeal);
        }
        let mut reduced = numerator.clone();
        let mut cancelled = 0;
        while let Some(q) = div_one_minus_u(&reduced) {
            reduced = q;
            cancelled += 1;
        }
        let degree = eval_at_one(&reduced);
        Ok(HilbertSeries {
            nvars,
            numerator,
            reduced_numerator: reduced,
            dimension: nvars - cancelled,
            degree,
        })
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (1-u)^{}", format_int_poly(&self.numerator), self.nvars)
    }
}

/// Minimal generators of the monomial ideal generated by `monos`.
pub fn minimalize(monos: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = monos.to_vec();
    sorted.sort_by_key(|m| (m.degree(), m.clone()));
    sorted.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort();
    kept
}

/// Numerator `h(u)` of the Hilbert series of `S/(monos)` over `(1 − u)^n`,
/// by pivot recursion `h(I) = h(I + (p)) + u^deg(p) · h(I : p)`.
pub fn monomial_numerator(monos: &[Monomial], nvars: usize) -> IntPoly {
    let mut memo = HashMap::new();
    numerator_rec(minimalize(monos), nvars, &mut memo)
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize, memo: &mut HashMap<Vec<Monomial>, IntPoly>) -> IntPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    if let Some(h) = memo.get(&gens) {
        return h.clone();
    }
    let mixed: Vec<&Monomial> = gens.iter().filter(|m| m.support().count() > 1).collect();
    let result = if mixed.is_empty() {
        gens.iter()
            .fold(vec![1], |acc, m| int_mul(&acc, &one_minus_power(m.degree())))
    } else {
        // pivot on the variable occurring in most mixed generators
        let mut counts = vec![0usize; nvars];
        for m in &mixed {
            for v in m.support() {
                counts[v] += 1;
            }
        }
        let v = (0..nvars).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
        let e = mixed.iter().map(|m| m.exponent(v)).filter(|&e| e > 0).min().unwrap();
        let pivot = Monomial::var(nvars, v).pow(e).expect("small exponent");
        let mut with_pivot = gens.clone();
        with_pivot.push(pivot.clone());
        let colon: Vec<Monomial> = gens.iter().map(|m| m.div(&m.gcd(&pivot)).unwrap()).collect();
        let a = numerator_rec(minimalize(&with_pivot), nvars, memo);
        let b = numerator_rec(minimalize(&colon), nvars, memo);
        int_add(&a, &shift(&b, e as usize))
    };
    memo.insert(gens, result.clone());
    result
}

/// Hilbert series of `S/I` for a monomial ideal.
pub fn hilbert_series_monomial(i: &Ideal) -> Result<HilbertSeries> {
    if !i.is_monomial() {
        return Err(Error::NonMonomial);
    }
    let monos: Vec<Monomial> = i
        .generators()
        .iter()
        .map(|g| g.leading_monomial().unwrap().clone())
        .collect();
    let n = i.ring().nvars();
    HilbertSeries::from_numerator(monomial_numerator(&monos, n), n)
}

fn require_homogeneous(i: &Ideal) -> Result<()> {
    for g in i.generators() {
        if !g.is_homogeneous().0 {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
    }
    Ok(())
}

/// Hilbert series of `S/I` for a homogeneous ideal, via its initial ideal.
pub fn hilbert_series(i: &Ideal) -> Result<HilbertSeries> {
    if i.is_monomial() {
        return hilbert_series_monomial(i);
    }
    require_homogeneous(i)?;
    let ord = i.ring().order();
    if !ord.is_degree_compatible() {
        return Err(Error::OrderNotDegreeCompatible(ord.to_string()));
    }
    let n = i.ring().nvars();
    HilbertSeries::from_numerator(monomial_numerator(&i.gb()?.leading_monomials(), n), n)
}

/// Degree `e(S/I)` of a homogeneous proper ideal.
pub fn multiplicity(i: &Ideal) -> Result<i64> {
    Ok(hilbert_series(i)?.degree)
}

/// Number of monomials outside the monomial ideal `(lead)`, which must be
/// zero-dimensional.
pub fn count_standard_monomials(lead: &[Monomial], nvars: usize) -> Result<u64> {
    if lead.iter().any(Monomial::is_one) {
        return Ok(0);
    }
    let mut bound = vec![u32::MAX; nvars];
    for m in lead {
        let mut sup = m.support();
        if let (Some(v), None) = (sup.next(), sup.next()) {
            bound[v] = bound[v].min(m.exponent(v));
        }
    }
    if bound.contains(&u32::MAX) {
        let dim = crate::idealops::max_independent_set_size(lead, nvars);
        return Err(Error::PositiveDimension(dim));
    }
    let lead = minimalize(lead);
    let mut cur = Monomial::one(nvars);
    Ok(count_rec(&lead, &bound, 0, &mut cur))
}

fn count_rec(lead: &[Monomial], bound: &[u32], v: usize, cur: &mut Monomial) -> u64 {
    if v == bound.len() {
        return 1;
    }
    let mut total = 0;
    for e in 0..bound[v] {
        cur.exponents_mut()[v] = e;
        if lead.iter().any(|m| m.divides(cur)) {
            break;
        }
        total += count_rec(lead, bound, v + 1, cur);
    }
    cur.exponents_mut()[v] = 0;
    total
}

/// `dim_k S/I` for a zero-dimensional ideal.
pub fn artinian_length(i: &Ideal) -> Result<u64> {
    let gb = i.gb()?;
    count_standard_monomials(&gb.leading_monomials(), i.ring().nvars())
}

/// Outcome of [`local_length_at_origin`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalLength {
    pub length: u64,
    /// Smallest truncation `N` at which the value was confirmed stable.
    pub stabilized_at: u32,
}

/// Removes linear forms without constant term by solving for one variable
/// each and substituting; returns the remaining generators in the ring of
/// the surviving variables. Lengths at the origin are unchanged.
pub fn eliminate_linear_forms(i: &Ideal) -> Result<Ideal> {
    let ring = i.ring();
    let n = ring.nvars();
    let is_linear = |g: &Polynomial| g.terms().iter().all(|(m, _)| m.degree() == 1);
    let mut linear: Vec<Polynomial> = i.generators().iter().filter(|g| is_linear(g)).cloned().collect();
    let mut rest: Vec<Polynomial> = i.generators().iter().filter(|g| !is_linear(g)).cloned().collect();
    if linear.is_empty() {
        return Ok(i.clone());
    }
    let field = ring.field();
    let mut pivots = Vec::new();
    while let Some(l) = linear.pop() {
        if l.is_zero() {
            continue;
        }
        // solve for the variable of the leading term
        let (m, c) = &l.terms()[0];
        let v = m.support().next().unwrap();
        let inv = field.inv(c)?;
        let x = Polynomial::var(ring, v);
        let solved = &x - &l.scale(&inv);
        let assign = [(v, solved)];
        for p in linear.iter_mut().chain(rest.iter_mut()) {
            if p.involves(v) {
                *p = p.substitute(&assign)?;
            }
        }
        pivots.push(v);
    }
    if pivots.len() == n {
        // every variable solved: the quotient is a single point
        let sub = ring.clone();
        let mut gens: Vec<Polynomial> = rest;
        gens.extend((0..n).map(|v| Polynomial::var(&sub, v)));
        return Ideal::new(&sub, gens);
    }
    let keep: Vec<usize> = (0..n).filter(|v| !pivots.contains(v)).collect();
    let sub = ring.subring(&keep, ring.order())?;
    let mut back = vec![usize::MAX; n];
    for (k, &v) in keep.iter().enumerate() {
        back[v] = k;
    }
    let gens = rest
        .iter()
        .map(|p| map_down(p, &sub, &back))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&sub, gens)
}

/// Monomials of degree exactly `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(v: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v + 1 == cur.len() {
            cur[v] = left;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[v] = e;
            rec(v + 1, left - e, cur, out);
        }
        cur[v] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// `λ((S/I)_𝔪)` computed as `dim_k S/(I + 𝔪^N)` for `N` doubling from
/// `2·(max generator degree) + 2` until the value is stable.
///
/// `L(N) = dim_k S/(I + 𝔪^N)` is non-decreasing, and `L(N) = L(N + 1)`
/// forces `𝔪^N ⊆ I` locally (Nakayama), so `L(N) = L(2N)` holds exactly
/// when `L(N) = L(N + 1)`; the cheaper comparison is the one evaluated.
pub fn local_length_at_origin(i: &Ideal) -> Result<LocalLength> {
    let cap = i.ring().limits().local_n_cap;
    let max_deg = i
        .generators()
        .iter()
        .filter_map(Polynomial::total_degree)
        .max()
        .unwrap_or(0);
    let reduced = eliminate_linear_forms(i)?;
    // a generator not vanishing at the origin is a unit in the local ring
    if reduced.generators().iter().any(|g| !g.constant_term().is_zero()) {
        return Ok(LocalLength {
            length: 0,
            stabilized_at: 0,
        });
    }
    let mut n = 2 * max_deg + 2;
    while 2 * n <= cap {
        i.ring().limits().check_deadline()?;
        let here = truncated_length(&reduced, n)?;
        if here == truncated_length(&reduced, n + 1)? {
            return Ok(LocalLength {
                length: here,
                stabilized_at: n,
            });
        }
        n *= 2;
    }
    Err(Error::Resource(format!(
        "local length did not stabilize up to N = {cap}"
    )))
}

/// `dim_k S/(I + 𝔪^N)`, from a standard basis under the local order.
pub fn truncated_length(i: &Ideal, n: u32) -> Result<u64> {
    let gb = buchberger_truncated(i.ring(), i.generators(), n)?;
    Ok(count_below_degree(&gb.leading_monomials(), i.ring().nvars(), n))
}

/// Number of monomials of degree `< n` outside the monomial ideal `(lead)`.
pub fn count_below_degree(lead: &[Monomial], nvars: usize, n: u32) -> u64 {
    if lead.iter().any(Monomial::is_one) {
        return 0;
    }
    let lead = minimalize(lead);
    let mut cur = Monomial::one(nvars);
    count_graded_rec(&lead, n, 0, 0, &mut cur)
}

fn count_graded_rec(lead: &[Monomial], n: u32, v: usize, deg: u32, cur: &mut Monomial) -> u64 {
    if v == cur.nvars() {
        return 1;
    }
    let mut total = 0;
    let mut e = 0;
    while deg + e < n {
        cur.exponents_mut()[v] = e;
        if lead.iter().any(|m| m.divides(cur)) {
            break;
        }
        total += count_graded_rec(lead, n, v + 1, deg + e, cur);
        e += 1;
    }
    cur.exponents_mut()[v] = 0;
    total
}

/// `dim_k S/(I + 𝔪^N)` from a global Gröbner basis with the monomials of
/// `𝔪^N` adjoined; slower, kept as an independent route.
pub fn truncated_length_global(i: &Ideal, n: u32) -> Result<u64> {
    let ring: &Ring = i.ring();
    let mut limits = ring.limits();
    let max_deg = i
        .generators()
        .iter()
        .filter_map(Polynomial::total_degree)
        .max()
        .unwrap_or(0);
    limits.gb_degree_cap = limits.gb_degree_cap.max(2 * n + max_deg);
    let big = ring.with_new_limits(limits);
    let mut gens: Vec<Polynomial> = i.generators().iter().map(|g| g.reorder(&big)).collect::<Result<_>>()?;
    gens.extend(
        monomials_of_degree(ring.nvars(), n)
            .into_iter()
            .map(|m| Polynomial::monomial(&big, m)),
    );
    let truncated = Ideal::new(&big, gens)?;
    artinian_length(&truncated)
}

/// Result of [`multiplicity_of_graded_sop`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedSopMultiplicity {
    /// `λ(S/(P + forms))`.
    pub length: u64,
    /// `(∏ deg forms) · e(S/P)`.
    pub product_value: i64,
    /// Set when the two values agree.
    pub cm_witness: bool,
}

/// Multiplicity of the images of homogeneous `forms` in `S/P`.
pub fn multiplicity_of_graded_sop(forms: &[Polynomial], p: &Ideal) -> Result<GradedSopMultiplicity> {
    let mut degs = 1i64;
    for f in forms {
        match f.homogeneous_degree() {
            Some(d) if d > 0 => degs *= d as i64,
            _ => return Err(Error::NotHomogeneous(f.to_string())),
        }
    }
    let q = p.add_generators(forms)?;
    match dimension(&q) {
        Ok(0) => {}
        Ok(d) => return Err(Error::NotASop(format!("dim S/(P + forms) = {d}"))),
        Err(Error::UnitIdeal) => return Err(Error::NotASop("P + forms is the unit ideal".into())),
        Err(e) => return Err(e),
    }
    let length = artinian_length(&q)?;
    let product_value = degs * multiplicity(p)?;
    Ok(GradedSopMultiplicity {
        length,
        product_value,
        cm_witness: length as i64 == product_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::FieldConfig;
    use crate::polyring::{MonomialOrder, RingContext};

    fn id(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    #[test]
    fn monomial_series() {
        let r2 = RingContext::rational(&["x", "y"]);
        assert_eq!(hilbert_series(&id(&r2, &["x*y"])).unwrap().numerator, vec![1, 0, -1]);
        assert_eq!(hilbert_series(&Ideal::zero(&r2)).unwrap().numerator, vec![1]);
        let r3 = RingContext::rational(&["x", "y", "z"]);
        let hs = hilbert_series(&id(&r3, &["x*y", "x*z", "y*z"])).unwrap();
        assert_eq!(hs.numerator, vec![1, 0, -3, 2]);
        assert_eq!(hs.dimension, 1);
        assert_eq!(hs.degree, 3);
        let r1 = RingContext::rational(&["x"]);
        assert_eq!(hilbert_series(&id(&r1, &["x"])).unwrap().numerator, vec![1, -1]);
    }

    #[test]
    fn elementary_symmetric_series() {
        let r = RingContext::rational(&["x", "y", "z"]);
        let i = id(&r, &["x+y+z", "x*y+x*z+y*z", "x*y*z"]);
        let hs = hilbert_series(&i).unwrap();
        let expect = int_mul(&int_mul(&one_minus_power(1), &one_minus_power(2)), &one_minus_power(3));
        assert_eq!(hs.numerator, expect);
        assert_eq!(hs.dimension, 0);
        assert_eq!(hs.degree, 6);
        assert_eq!(artinian_length(&i).unwrap(), 6);
    }

    #[test]
    fn degrees() {
        let r = RingContext::rational(&["x", "y", "z"]);
        assert_eq!(multiplicity(&id(&r, &["y", "z"])).unwrap(), 1);
        assert_eq!(multiplicity(&id(&r, &["x^3 + y^2*z - z^3"])).unwrap(), 3);
        assert!(matches!(
            hilbert_series(&id(&r, &["x + y^2"])),
            Err(Error::NotHomogeneous(_))
        ));
        assert_eq!(hilbert_series(&Ideal::unit(&r)), Err(Error::UnitIdeal));
    }

    #[test]
    fn order_independence() {
        let gens = ["x^2 - y*z", "x*y - z^2", "y^3 - x*z^2"];
        let a = RingContext::rational(&["x", "y", "z"]);
        let b = a.with_order(MonomialOrder::Deglex);
        assert_eq!(
            hilbert_series(&id(&a, &gens)).unwrap(),
            hilbert_series(&id(&b, &gens)).unwrap()
        );
        let c = a.with_order(MonomialOrder::Lex);
        assert!(matches!(
            hilbert_series(&id(&c, &gens)),
            Err(Error::OrderNotDegreeCompatible(_))
        ));
    }

    #[test]
    fn lengths() {
        let r = RingContext::rational(&["x", "y", "z"]);
        assert_eq!(artinian_length(&id(&r, &["x", "y^2", "z^3"])).unwrap(), 6);
        assert!(matches!(
            artinian_length(&id(&r, &["x", "y"])),
            Err(Error::PositiveDimension(1))
        ));
        let r4 = RingContext::rational(&["x", "y", "z", "w"]);
        let i = id(&r4, &["x", "z", "w*(z+w) + (x+y)*(x+y+z)", "w*(x+y)*(x+y+z+w)"]);
        assert_eq!(artinian_length(&i).unwrap(), 6);
    }

    #[test]
    fn local_lengths() {
        let r = RingContext::rational(&["x", "y"]);
        assert_eq!(local_length_at_origin(&id(&r, &["x - x^2", "y"])).unwrap().length, 1);
        assert_eq!(local_length_at_origin(&id(&r, &["x^2", "y"])).unwrap().length, 2);
        assert_eq!(local_length_at_origin(&id(&r, &["x - 1", "y"])).unwrap().length, 0);
        let r3 = RingContext::rational(&["x", "y", "z"]);
        let i = id(&r3, &["x*y - x^3", "y^2 - z", "z*(1 - x)"]);
        let global_minus_far = local_length_at_origin(&i).unwrap().length;
        assert!(global_minus_far >= 1);
        assert!(matches!(
            local_length_at_origin(&id(&r, &["x"])),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn truncation_routes_agree() {
        let r = RingContext::rational(&["x", "y", "z"]);
        let i = id(&r, &["x*y - x^3 + z^2", "y^2 - z + x^2", "z*(1 - x) - y^3"]);
        for n in [1, 2, 3, 5, 8] {
            assert_eq!(
                truncated_length(&i, n).unwrap(),
                truncated_length_global(&i, n).unwrap(),
                "N = {n}"
            );
        }
        let r2 = RingContext::rational(&["x", "y"]);
        let j = id(&r2, &["x - x^2", "y"]);
        assert_eq!(truncated_length(&j, 6).unwrap(), 1);
        assert_eq!(truncated_length(&id(&r2, &["x^2", "y^3"]), 3).unwrap(), 5);
    }

    #[test]
    fn linear_prepass_preserves_length() {
        let r = RingContext::rational(&["x", "y", "z"]);
        let i = id(&r, &["x + 2*y + 3*z", "y^2 - x*z", "z^3 + x*y"]);
        let reduced = eliminate_linear_forms(&i).unwrap();
        assert_eq!(reduced.ring().nvars(), 2);
        assert_eq!(artinian_length(&reduced).unwrap(), artinian_length(&i).unwrap());
    }

    #[test]
    fn graded_sop_rows() {
        let r = RingContext::rational(&["x", "y", "z"]);
        let row =
            multiplicity_of_graded_sop(&[crate::parse_polynomial(&r, "x+y+z").unwrap()], &id(&r, &["y", "z"])).unwrap();
        assert_eq!((row.length, row.product_value, row.cm_witness), (1, 1, true));
        let r4 = RingContext::rational(&["x", "y", "z", "w"]);
        let forms = [
            crate::parse_polynomial(&r4, "x").unwrap(),
            crate::parse_polynomial(&r4, "z").unwrap(),
        ];
        assert_eq!(
            multiplicity_of_graded_sop(&forms, &id(&r4, &["w", "x+y"]))
                .unwrap()
                .length,
            1
        );
        let rq = RingContext::new(FieldConfig::cyclotomic(3), &["x", "y", "z"], MonomialOrder::Grevlex).unwrap();
        let sigma1 = [crate::parse_polynomial(&rq, "x+y+z").unwrap()];
        let row = multiplicity_of_graded_sop(&sigma1, &id(&rq, &["y - t*z", "z - x"])).unwrap();
        assert_eq!(row.length, 1);
        // x + y + z vanishes on the line y = t*z, z = t*x since 1 + t + t^2 = 0
        assert!(matches!(
            multiplicity_of_graded_sop(&sigma1, &id(&rq, &["y - t*z", "z - t*x"])),
            Err(Error::NotASop(_))
        ));
        assert!(matches!(
            multiplicity_of_graded_sop(&[crate::parse_polynomial(&r, "x").unwrap()], &id(&r, &["x", "y"])),
            Err(Error::NotASop(_))
        ));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_int_poly(&[1, 0, 0, 0, -3, 0, 2]), "1 - 3u^4 + 2u^6");
        let hs = HilbertSeries::from_numerator(vec![1, -1], 1).unwrap();
        assert_eq!(hs.to_string(), "(1 - u) / (1-u)^1");
    }
}
