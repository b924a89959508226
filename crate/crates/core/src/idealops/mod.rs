//! Ideal-level algebra: sums, products, powers, intersections, colons,
//! saturations, elimination, equality, dimension and radical membership.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::polyring::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Ring};

/// Finitely generated ideal with a per-order cache of reduced Gröbner bases.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    monomial: bool,
    gb_cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            monomial: self.monomial,
            gb_cache: Mutex::new(self.gb_cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl Ideal {
    /// Ideal generated by `gens`; zero generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.ring().same_as(ring) {
                if g.ring().compatible(ring) {
                    kept.push(g.reorder(ring)?);
                    continue;
                }
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        kept.retain(|g| !g.is_zero());
        let monomial = kept.iter().all(Polynomial::is_monomial_term);
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            monomial,
            gb_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| parse_polynomial(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect()).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether every generator is homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous().0)
    }

    /// Reduced Gröbner basis under the ring's order (cached).
    pub fn gb(&self) -> Result<Arc<GroebnerBasis>> {
        self.gb_with_order(self.ring.order())
    }

    /// Reduced Gröbner basis under `ord` (cached).
    pub fn gb_with_order(&self, ord: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.gb_cache.lock().unwrap().get(&ord) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger(&self.ring.with_order(ord), &self.gens)?);
        self.gb_cache.lock().unwrap().entry(ord).or_insert_with(|| gb.clone());
        Ok(gb)
    }

    /// Reduced Gröbner basis under a degree-compatible order: the ring's own
    /// order when it qualifies, grevlex otherwise.
    pub fn graded_gb(&self) -> Result<Arc<GroebnerBasis>> {
        let ord = self.ring.order();
        self.gb_with_order(if ord.is_degree_compatible() {
            ord
        } else {
            MonomialOrder::Grevlex
        })
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(Polynomial::is_unit) {
            return Ok(true);
        }
        Ok(self.gb()?.is_unit())
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        let gb = self.gb()?;
        gb.contains(&p.reorder(gb.ring())?)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if self.ring.compatible(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// `self + (polys)`.
    pub fn add_generators(&self, polys: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(polys.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.try_mul(&b.reorder(&self.ring)?)?);
            }
        }
        let out = Ideal::new(&self.ring, gens)?;
        Ok(if out.monomial {
            out.minimalize_monomial()
        } else {
            out.dedup()
        })
    }

    /// `self^k`, with `self^0` the unit ideal.
    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    fn dedup(mut self) -> Ideal {
        let mut seen = std::collections::HashSet::new();
        self.gens.retain(|g| seen.insert(g.clone()));
        self
    }

    /// For monomial ideals: drop generators divisible by another generator.
    pub fn minimalize_monomial(&self) -> Ideal {
        debug_assert!(self.monomial);
        let ring = &self.ring;
        let mut monos: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect();
        monos.sort_by_key(|m| (m.degree(), m.clone()));
        monos.dedup();
        let mut kept: Vec<Monomial> = Vec::new();
        for m in monos {
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        Ideal::new(ring, kept.into_iter().map(|m| Polynomial::monomial(ring, m)).collect()).unwrap()
    }

    /// Leading monomials of the reduced basis under `ord`.
    pub fn initial_monomials(&self, ord: MonomialOrder) -> Result<Vec<Monomial>> {
        Ok(self.gb_with_order(ord)?.leading_monomials())
    }

    /// Ideal of initial terms under a degree-compatible order.
    pub fn initial_ideal(&self) -> Result<Ideal> {
        let gb = self.graded_gb()?;
        let ring = &self.ring;
        Ideal::new(
            ring,
            gb.leading_monomials()
                .into_iter()
                .map(|m| Polynomial::monomial(ring, m))
                .collect(),
        )
    }

    /// The reduced Gröbner basis elements, as an ideal in this ring.
    pub fn with_gb_generators(&self) -> Result<Ideal> {
        let gb = self.gb()?;
        let out = Ideal::new(&self.ring, gb.elements().to_vec())?;
        out.gb_cache.lock().unwrap().insert(self.ring.order(), gb);
        Ok(out)
    }
}

/// `I + J`.
pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.sum(j)
}

/// `I · J`.
pub fn ideal_product(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.product(j)
}

/// `I^k`.
pub fn ideal_power(i: &Ideal, k: u32) -> Ideal {
    i.power(k)
}

/// `I ∩ J`: lcm fast path for monomial ideals, otherwise elimination of `u`
/// from `u·I + (1 − u)·J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check(j)?;
    let ring = i.ring();
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if i.is_monomial() && j.is_monomial() {
        return Ok(intersect_monomial(i, j));
    }
    intersect_by_elimination(i, j)
}

pub fn intersect_monomial(i: &Ideal, j: &Ideal) -> Ideal {
    let ring = i.ring();
    let mut gens = Vec::new();
    for a in i.generators() {
        for b in j.generators() {
            let m = a.leading_monomial().unwrap().lcm(b.leading_monomial().unwrap());
            gens.push(Polynomial::monomial(ring, m));
        }
    }
    Ideal::new(ring, gens).unwrap().minimalize_monomial()
}

pub fn intersect_by_elimination(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check(j)?;
    let ring = i.ring();
    let n = ring.nvars();
    let u_name = ring.fresh_name("u");
    let big = ring.extend_front(&[u_name], MonomialOrder::Block(1))?;
    let shift: Vec<usize> = (1..=n).collect();
    let u = Polynomial::var(&big, 0);
    let one_minus_u = &Polynomial::one(&big) - &u;
    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(&u * &g.map_into(&big, &shift)?);
    }
    for g in j.generators() {
        gens.push(&one_minus_u * &g.map_into(&big, &shift)?);
    }
    let gb = buchberger(&big, &gens)?;
    let back: Vec<usize> = std::iter::once(usize::MAX).chain(0..n).collect();
    let mut out = Vec::new();
    for g in gb.elements() {
        if !g.involves(0) {
            out.push(map_down(g, ring, &back)?);
        }
    }
    Ideal::new(ring, out)
}

/// Maps a polynomial that does not involve dropped variables (marked with
/// `usize::MAX` in `var_map`) into `target`.
pub(crate) fn map_down(p: &Polynomial, target: &Ring, var_map: &[usize]) -> Result<Polynomial> {
    p.map_into(target, var_map)
        .map_err(|_| Error::InvalidArgument("polynomial involves an eliminated variable".into()))
}

/// `(I : g)`.
pub fn colon(i: &Ideal, g: &Polynomial) -> Result<Ideal> {
    let ring = i.ring();
    if g.is_zero() {
        return Err(Error::InvalidArgument("colon by the zero polynomial".into()));
    }
    let g = g.reorder(ring)?;
    if g.is_unit() {
        return Ok(i.clone());
    }
    if i.is_monomial() && g.is_monomial_term() {
        let gm = g.leading_monomial().unwrap();
        let gens = i
            .generators()
            .iter()
            .map(|a| {
                let m = a.leading_monomial().unwrap();
                Polynomial::monomial(ring, m.div(&m.gcd(gm)).unwrap())
            })
            .collect();
        return Ok(Ideal::new(ring, gens)?.minimalize_monomial());
    }
    let principal = Ideal::new(ring, vec![g.clone()])?;
    let both = intersect(i, &principal)?;
    let gens = both
        .generators()
        .iter()
        .map(|h| h.exact_div(&g))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// `(I : J) = ∩_j (I : g_j)`.
pub fn colon_ideal(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check(j)?;
    let mut acc: Option<Ideal> = None;
    for g in j.generators() {
        let c = colon(i, g)?;
        acc = Some(match acc {
            None => c,
            Some(a) => intersect(&a, &c)?.with_gb_generators()?,
        });
    }
    acc.ok_or_else(|| Error::InvalidArgument("colon by the zero ideal".into()))
}

/// Saturation `I : g^∞` and the least exponent `e` with `I : g^e = I : g^(e+1)`.
/// Monomial input iterates colons; otherwise the saturation comes from one
/// elimination and `e` is the least exponent with `g^e · (I : g^∞) ⊆ I`.
pub fn saturate(i: &Ideal, g: &Polynomial) -> Result<(Ideal, u32)> {
    if g.is_zero() {
        return Err(Error::InvalidArgument("saturation by the zero polynomial".into()));
    }
    let g = g.reorder(i.ring())?;
    if i.is_monomial() && g.is_monomial_term() {
        let mut cur = i.clone();
        let mut e = 0;
        loop {
            let next = colon(&cur, &g)?.with_gb_generators()?;
            if ideal_equal(&cur, &next)? {
                return Ok((next, e));
            }
            cur = next;
            e += 1;
        }
    }
    let sat = saturate_by_extra_variable(i, &g)?.with_gb_generators()?;
    let gb = i.gb()?;
    let mut multiples = sat.generators().to_vec();
    let mut e = 0;
    loop {
        i.ring().limits().check_deadline()?;
        let mut inside = true;
        for h in &multiples {
            if !gb.contains(h)? {
                inside = false;
                break;
            }
        }
        if inside {
            return Ok((sat, e));
        }
        multiples = multiples.iter().map(|h| h * &g).collect();
        e += 1;
    }
}

/// Saturation `I : g^∞` by eliminating `u` from `I + (1 − u·g)`.
pub fn saturate_by_extra_variable(i: &Ideal, g: &Polynomial) -> Result<Ideal> {
    let ring = i.ring();
    let n = ring.nvars();
    let big = ring.extend_front(&[ring.fresh_name("u")], MonomialOrder::Block(1))?;
    let shift: Vec<usize> = (1..=n).collect();
    let mut gens: Vec<Polynomial> = i
        .generators()
        .iter()
        .map(|p| p.map_into(&big, &shift))
        .collect::<Result<_>>()?;
    let ug = &Polynomial::var(&big, 0) * &g.map_into(&big, &shift)?;
    gens.push(&Polynomial::one(&big) - &ug);
    let gb = buchberger(&big, &gens)?;
    let back: Vec<usize> = std::iter::once(usize::MAX).chain(0..n).collect();
    let out = gb
        .elements()
        .iter()
        .filter(|p| !p.involves(0))
        .map(|p| map_down(p, ring, &back))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, out)
}

/// Saturation `I : J^∞` by iterated `colon_ideal`; also returns the exponent.
pub fn saturate_ideal(i: &Ideal, j: &Ideal) -> Result<(Ideal, u32)> {
    if j.is_zero() {
        return Err(Error::InvalidArgument("saturation by the zero ideal".into()));
    }
    let mut cur = i.clone();
    let mut e = 0;
    loop {
        let next = colon_ideal(&cur, j)?.with_gb_generators()?;
        if ideal_equal(&cur, &next)? {
            return Ok((next, e));
        }
        cur = next;
        e += 1;
    }
}

/// `I : x_v^∞`. For homogeneous `I` this divides the grevlex basis with
/// `x_v` ordered last by the largest power of `x_v` dividing each element;
/// otherwise it falls back to iterated colon.
pub fn saturate_by_variable(i: &Ideal, v: usize) -> Result<Ideal> {
    let ring = i.ring();
    let n = ring.nvars();
    if v >= n {
        return Err(Error::UnknownVariable(format!("#{v}")));
    }
    if !i.is_homogeneous() {
        return Ok(saturate(i, &Polynomial::var(ring, v))?.0);
    }
    let mut perm: Vec<usize> = (0..n).filter(|&k| k != v).collect();
    perm.push(v);
    let names: Vec<String> = perm.iter().map(|&k| ring.var_names()[k].clone()).collect();
    let moved =
        crate::polyring::RingContext::with_limits(ring.field().clone(), names, MonomialOrder::Grevlex, ring.limits())?;
    let mut to_moved = vec![0; n];
    for (pos, &k) in perm.iter().enumerate() {
        to_moved[k] = pos;
    }
    let gens: Vec<Polynomial> = i
        .generators()
        .iter()
        .map(|g| g.map_into(&moved, &to_moved))
        .collect::<Result<_>>()?;
    let gb = buchberger(&moved, &gens)?;
    let last = n - 1;
    let mut out = Vec::with_capacity(gb.len());
    for g in gb.elements() {
        let k = g.terms().iter().map(|(m, _)| m.exponent(last)).min().unwrap_or(0);
        let h = if k == 0 {
            g.clone()
        } else {
            let xk = Polynomial::monomial(&moved, Monomial::var(n, last).pow(k)?);
            g.exact_div(&xk)?
        };
        out.push(h.map_into(ring, &perm)?);
    }
    Ideal::new(ring, out)
}

/// `I : 𝔪^∞ = ∩_v (I : x_v^∞)` for the homogeneous maximal ideal `𝔪`.
pub fn saturate_maximal(i: &Ideal) -> Result<Ideal> {
    let n = i.ring().nvars();
    let mut parts = Vec::with_capacity(n);
    for v in 0..n {
        let s = saturate_by_variable(i, v)?;
        if ideal_equal(&s, i)? {
            // I ⊆ I : 𝔪^∞ ⊆ I : x_v^∞ = I
            return i.with_gb_generators();
        }
        parts.push(s);
    }
    let mut acc = parts.remove(0);
    for p in parts {
        acc = intersect(&acc, &p)?.with_gb_generators()?;
    }
    Ok(acc)
}

/// Eliminates the variables at `drop` and returns the elimination ideal in
/// the ring on the remaining variables (original relative order kept).
pub fn eliminate(i: &Ideal, drop: &[usize]) -> Result<Ideal> {
    let ring = i.ring();
    let n = ring.nvars();
    for &d in drop {
        if d >= n {
            return Err(Error::UnknownVariable(format!("#{d}")));
        }
    }
    let keep: Vec<usize> = (0..n).filter(|v| !drop.contains(v)).collect();
    let sub_order = match ring.order() {
        MonomialOrder::Lex => MonomialOrder::Lex,
        MonomialOrder::Deglex => MonomialOrder::Deglex,
        _ => MonomialOrder::Grevlex,
    };
    let sub = ring.subring(&keep, sub_order)?;
    if drop.is_empty() {
        let gb = i.gb_with_order(sub_order)?;
        return Ideal::new(
            &sub,
            gb.elements().iter().map(|g| g.reorder(&sub)).collect::<Result<_>>()?,
        );
    }
    // reorder variables so the dropped ones come first
    let mut perm: Vec<usize> = drop.to_vec();
    perm.extend(keep.iter().copied());
    let names: Vec<String> = perm.iter().map(|&v| ring.var_names()[v].clone()).collect();
    let elim = crate::polyring::RingContext::with_limits(
        ring.field().clone(),
        names,
        MonomialOrder::Block(drop.len()),
        ring.limits(),
    )?;
    let mut to_elim = vec![0; n];
    for (pos, &v) in perm.iter().enumerate() {
        to_elim[v] = pos;
    }
    let gens: Vec<Polynomial> = i
        .generators()
        .iter()
        .map(|g| g.map_into(&elim, &to_elim))
        .collect::<Result<_>>()?;
    let gb = buchberger(&elim, &gens)?;
    let mut back = vec![usize::MAX; n];
    for k in 0..keep.len() {
        back[drop.len() + k] = k;
    }
    let out = gb
        .elements()
        .iter()
        .filter(|g| (0..drop.len()).all(|v| !g.involves(v)))
        .map(|g| map_down(g, &sub, &back))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&sub, out)
}

/// Eliminates variables given by name.
pub fn eliminate_named(i: &Ideal, drop: &[&str]) -> Result<Ideal> {
    let idx = drop.iter().map(|v| i.ring().var_index(v)).collect::<Result<Vec<_>>>()?;
    eliminate(i, &idx)
}

/// Equality via reduced Gröbner bases under the ring's order.
pub fn ideal_equal(i: &Ideal, j: &Ideal) -> Result<bool> {
    i.check(j)?;
    let a = i.gb()?;
    let b = j.gb_with_order(i.ring().order())?;
    Ok(a.elements() == b.elements())
}

/// Largest set of variables containing the support of no monomial in `monos`.
pub fn max_independent_set_size(monos: &[Monomial], nvars: usize) -> usize {
    let supports: Vec<u64> = monos
        .iter()
        .map(|m| m.support().fold(0u64, |acc, v| acc | (1 << v)))
        .collect();
    let mut best = 0;
    for mask in 0u64..(1u64 << nvars) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !mask != 0) {
            best = size;
        }
    }
    best
}

/// Krull dimension of `S/I` from the initial ideal under a degree-compatible order.
pub fn dimension(i: &Ideal) -> Result<usize> {
    let n = i.ring().nvars();
    if i.is_zero() {
        return Ok(n);
    }
    let gb = i.graded_gb()?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(max_independent_set_size(&gb.leading_monomials(), n))
}

/// Height `n − dim S/I`.
pub fn height(i: &Ideal) -> Result<usize> {
    Ok(i.ring().nvars() - dimension(i)?)
}

/// `g ∈ √I` via the Rabinowitsch trick: `1 ∈ I + (1 − u·g)`.
pub fn radical_membership(g: &Polynomial, i: &Ideal) -> Result<bool> {
    let ring = i.ring();
    if g.is_zero() {
        return Ok(true);
    }
    let n = ring.nvars();
    let big = ring.extend_front(&[ring.fresh_name("u")], MonomialOrder::Grevlex)?;
    let shift: Vec<usize> = (1..=n).collect();
    let mut gens: Vec<Polynomial> = i
        .generators()
        .iter()
        .map(|p| p.map_into(&big, &shift))
        .collect::<Result<_>>()?;
    let ug = &Polynomial::var(&big, 0) * &g.reorder(ring)?.map_into(&big, &shift)?;
    gens.push(&Polynomial::one(&big) - &ug);
    Ok(buchberger(&big, &gens)?.is_unit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::RingContext;

    fn r3() -> Ring {
        RingContext::rational(&["x", "y", "z"])
    }

    fn id(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn powers_and_products() {
        let r = RingContext::rational(&["x", "y"]);
        let sq = id(&r, &["x", "y"]).power(2);
        assert!(ideal_equal(&sq, &id(&r, &["x^2", "x*y", "y^2"])).unwrap());
        assert!(id(&r, &["x"]).power(0).is_unit().unwrap());
        let r = r3();
        let e = id(&r, &["x*y", "x*z", "y*z"]);
        let prod = e.product(&e).unwrap();
        // x^2y^2, x^2yz, xy^2z, x^2z^2, xyz^2, y^2z^2
        assert_eq!(prod.generators().len(), 6);
    }

    #[test]
    fn intersections() {
        let r = r3();
        let both = intersect(&id(&r, &["x"]), &id(&r, &["y"])).unwrap();
        assert!(ideal_equal(&both, &id(&r, &["x*y"])).unwrap());
        let a = id(&r, &["x", "y"]);
        let b = id(&r, &["y", "z"]);
        let fast = intersect(&a, &b).unwrap();
        let slow = intersect_by_elimination(&a, &b).unwrap();
        let expect = id(&r, &["y", "x*z"]);
        assert!(ideal_equal(&fast, &expect).unwrap());
        assert!(ideal_equal(&slow, &expect).unwrap());
    }

    #[test]
    fn jacobian_ideal_is_a_triple_intersection() {
        let r = RingContext::rational(&["x", "y", "z", "w"]);
        let p1 = id(&r, &["z+w", "x+y"]);
        let p2 = id(&r, &["w", "x+y"]);
        let p3 = id(&r, &["w", "x+y+z"]);
        let k = intersect(&intersect(&p1, &p2).unwrap(), &p3).unwrap();
        let a = id(&r, &["w*(z+w)", "(x+y)*(x+y+z)", "w*(x+y)"]);
        assert!(ideal_equal(&k, &a).unwrap());
    }

    #[test]
    fn colons() {
        let r = r3();
        let i = id(&r, &["x^2", "x*y"]);
        assert!(ideal_equal(&colon(&i, &p(&r, "x")).unwrap(), &id(&r, &["x", "y"])).unwrap());
        assert!(ideal_equal(&colon(&i, &Polynomial::one(&r)).unwrap(), &i).unwrap());
        assert!(ideal_equal(&colon(&id(&r, &["x*y"]), &p(&r, "y")).unwrap(), &id(&r, &["x"])).unwrap());
        // non-monomial route
        let j = id(&r, &["x^2 + x*y", "x*y + y^2"]);
        let c = colon(&j, &p(&r, "x + y")).unwrap();
        assert!(ideal_equal(&c, &id(&r, &["x", "y"])).unwrap());
    }

    #[test]
    fn saturations() {
        let r = r3();
        let i = id(&r, &["x^2", "x*y"]);
        let (s, e) = saturate(&i, &p(&r, "x")).unwrap();
        assert!(s.is_unit().unwrap());
        assert_eq!(e, 2);
        let (s, _) = saturate(&id(&r, &["x*y"]), &p(&r, "z")).unwrap();
        assert!(ideal_equal(&s, &id(&r, &["x*y"])).unwrap());
        let (s, _) = saturate(&id(&r, &["x^2", "y"]), &p(&r, "y")).unwrap();
        assert!(s.is_unit().unwrap());

        let r2 = RingContext::rational(&["x", "y"]);
        let m = Ideal::maximal(&r2);
        let (s, _) = saturate_ideal(&id(&r2, &["x^2", "x*y"]), &m).unwrap();
        assert!(ideal_equal(&s, &id(&r2, &["x"])).unwrap());
        let (s, _) = saturate_ideal(&id(&r2, &["x"]), &m).unwrap();
        assert!(ideal_equal(&s, &id(&r2, &["x"])).unwrap());
        let (s, _) = saturate_ideal(&m.power(3), &m).unwrap();
        assert!(s.is_unit().unwrap());
    }

    #[test]
    fn saturation_routes_agree() {
        let r = r3();
        let i = id(&r, &["x^2*y - x*z", "x*y^2"]);
        let g = p(&r, "x");
        let (a, _) = saturate(&i, &g).unwrap();
        let b = saturate_by_extra_variable(&i, &g).unwrap();
        assert!(ideal_equal(&a, &b).unwrap());
    }

    #[test]
    fn maximal_saturation_routes_agree() {
        let r = r3();
        let m = Ideal::maximal(&r);
        let i = id(&r, &["x*y", "x*z", "y*z"]).power(2);
        let fast = saturate_maximal(&i).unwrap();
        let (slow, _) = saturate_ideal(&i, &m).unwrap();
        assert!(ideal_equal(&fast, &slow).unwrap());
        assert!(fast.contains(&p(&r, "x*y*z")).unwrap());
        let j = id(&r, &["x^2 - y*z", "x*z"]).product(&m).unwrap();
        assert!(ideal_equal(&saturate_maximal(&j).unwrap(), &saturate_ideal(&j, &m).unwrap().0).unwrap());
        let s = saturate_by_variable(&id(&r, &["x*z^2", "y*z"]), 2).unwrap();
        assert!(ideal_equal(&s, &id(&r, &["x", "y"])).unwrap());
    }

    #[test]
    fn elimination() {
        let r = RingContext::rational(&["u", "x", "y"]);
        let i = id(&r, &["u*x", "(1-u)*y"]);
        let e = eliminate_named(&i, &["u"]).unwrap();
        let sub = RingContext::rational(&["x", "y"]);
        assert!(ideal_equal(&e, &id(&sub, &["x*y"])).unwrap());
        let e = eliminate_named(&id(&RingContext::rational(&["x", "y"]), &["x - y^2"]), &["x"]).unwrap();
        assert!(e.is_zero());
        let e = eliminate(&id(&r, &["x + y", "x - y"]), &[]).unwrap();
        assert_eq!(e.generators().len(), 2);
    }

    #[test]
    fn equality() {
        let r = r3();
        assert!(ideal_equal(&id(&r, &["x", "y"]), &id(&r, &["x+y", "x-y"])).unwrap());
        assert!(!ideal_equal(&id(&r, &["x"]), &id(&r, &["x^2"])).unwrap());
    }

    #[test]
    fn dimensions() {
        let r = r3();
        assert_eq!(dimension(&id(&r, &["x*y", "x*z", "y*z"])).unwrap(), 1);
        assert_eq!(dimension(&Ideal::zero(&r)).unwrap(), 3);
        assert_eq!(dimension(&Ideal::unit(&r)), Err(Error::UnitIdeal));
        assert_eq!(height(&id(&r, &["x", "y*z"])).unwrap(), 2);
    }

    #[test]
    fn radical_membership_examples() {
        let r = r3();
        assert!(radical_membership(&p(&r, "x"), &id(&r, &["x^2"])).unwrap());
        assert!(!radical_membership(&p(&r, "x"), &id(&r, &["y"])).unwrap());
        let sym = id(&r, &["x*y + x*z + y*z", "x*y*z"]);
        assert!(radical_membership(&p(&r, "x*y"), &sym).unwrap());
    }
}
