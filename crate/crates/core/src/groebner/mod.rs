//! Multivariate division and Buchberger's algorithm.
//!
//! Pairs are selected by the normal strategy (smallest lcm) refined by the
//! sugar degree, and pruned with the Gebauer–Möller installation of
//! Buchberger's coprime and chain criteria. Every basis element is kept
//! monic. The output is the reduced basis, which is unique for a given ideal
//! and order, so equal ideals produce identical element lists.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Coeff, FieldConfig};
use crate::polyring::{add_scaled, cmp_monomials, Monomial, MonomialOrder, Polynomial, Ring, Term};

/// A reduced Gröbner basis under its ring's order, sorted by ascending
/// leading monomial.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    /// Degree `N` for standard bases computed modulo `𝔪^N`.
    truncation: Option<u32>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.elements == other.elements && self.truncation == other.truncation
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    /// Normal form of `p`, which must live in this basis' ring.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        if !p.ring().same_as(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let divisors = self.elements.iter().map(Divisor::monic).collect::<Vec<_>>();
        let terms = reduce_terms(
            self.ring.field(),
            self.order(),
            p.terms().to_vec(),
            &divisors,
            true,
            None,
            self.truncation,
        );
        Ok(Polynomial::from_sorted_terms(&self.ring, terms))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.elements.iter().map(|p| p.to_string()))
            .finish()
    }
}

struct Divisor<'a> {
    lm: &'a Monomial,
    lm_deg: u32,
    terms: &'a [Term],
    /// `None` when the divisor is monic.
    lc_inv: Option<Coeff>,
}

impl<'a> Divisor<'a> {
    fn monic(p: &'a Polynomial) -> Self {
        let lm = p.leading_monomial().expect("nonzero basis element");
        Divisor {
            lm,
            lm_deg: lm.degree(),
            terms: p.terms(),
            lc_inv: None,
        }
    }

    fn general(p: &'a Polynomial) -> Result<Self> {
        let field = p.ring().field();
        let lc = p.leading_coeff().expect("nonzero divisor");
        let lm = p.leading_monomial().unwrap();
        let lc_inv = if field.is_one(lc) { None } else { Some(field.inv(lc)?) };
        Ok(Divisor {
            lm,
            lm_deg: lm.degree(),
            terms: p.terms(),
            lc_inv,
        })
    }
}

/// Divides `w` by `divisors`. With `full = false` only the leading term is
/// reduced. When `sugar` is given it is updated with the degrees of the
/// multipliers used. With `trunc = Some(N)` terms of degree `≥ N` are dropped.
fn reduce_terms(
    field: &FieldConfig,
    ord: MonomialOrder,
    mut w: Vec<Term>,
    divisors: &[Divisor<'_>],
    full: bool,
    mut sugar: Option<(&mut u32, &[u32])>,
    trunc: Option<u32>,
) -> Vec<Term> {
    if let Some(n) = trunc {
        w.retain(|(m, _)| m.degree() < n);
    }
    let mut done: Vec<Term> = Vec::new();
    let mut pos = 0;
    while pos < w.len() {
        let (m, c) = &w[pos];
        let mdeg = m.degree();
        let hit = divisors
            .iter()
            .enumerate()
            .find(|(_, d)| d.lm_deg <= mdeg && d.lm.divides(m));
        match hit {
            Some((k, d)) => {
                let q = m.div(d.lm).unwrap();
                let mut coef = field.neg(c);
                if let Some(inv) = &d.lc_inv {
                    coef = field.mul(&coef, inv);
                }
                if let Some((s, sugars)) = sugar.as_mut() {
                    **s = (**s).max(q.degree() + sugars[k]);
                }
                w = add_scaled(field, ord, &w[pos + 1..], &d.terms[1..], &coef, &q);
                if let Some(n) = trunc {
                    w.retain(|(m, _)| m.degree() < n);
                }
                pos = 0;
            }
            None => {
                if !full {
                    done.extend(w.drain(pos..));
                    return done;
                }
                done.push(w[pos].clone());
                pos += 1;
            }
        }
    }
    done
}

/// Remainder of multivariate division of `p` by the list `g` (not
/// necessarily a Gröbner basis), using the order of `p`'s ring.
pub fn normal_form(p: &Polynomial, g: &[Polynomial]) -> Result<Polynomial> {
    let ring = p.ring();
    let mut divisors = Vec::with_capacity(g.len());
    for q in g.iter().filter(|q| !q.is_zero()) {
        if !q.ring().same_as(ring) {
            return Err(Error::RingMismatch);
        }
        divisors.push(Divisor::general(q)?);
    }
    let terms = reduce_terms(
        ring.field(),
        ring.order(),
        p.terms().to_vec(),
        &divisors,
        true,
        None,
        None,
    );
    Ok(Polynomial::from_sorted_terms(ring, terms))
}

/// Normal form under an explicit order: `p` and `g` are re-sorted first.
pub fn normal_form_with_order(p: &Polynomial, g: &[Polynomial], ord: MonomialOrder) -> Result<Polynomial> {
    let target = p.ring().with_order(ord);
    let g: Vec<Polynomial> = g.iter().map(|q| q.reorder(&target)).collect::<Result<_>>()?;
    normal_form(&p.reorder(&target)?, &g)
}

/// Division with quotients: returns `(q, r)` with `p = Σ q_i g_i + r`.
pub fn divide(p: &Polynomial, g: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial)> {
    let ring = p.ring();
    let field = ring.field();
    let ord = ring.order();
    for q in g {
        if !q.ring().same_as(ring) {
            return Err(Error::RingMismatch);
        }
    }
    let mut quots: Vec<Vec<Term>> = vec![Vec::new(); g.len()];
    let mut rem: Vec<Term> = Vec::new();
    let mut w = p.terms().to_vec();
    while let Some((m, c)) = w.first().cloned() {
        let hit = g
            .iter()
            .enumerate()
            .find(|(_, q)| q.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match hit {
            Some((k, q)) => {
                let lm = q.leading_monomial().unwrap();
                let t = m.div(lm).unwrap();
                let coef = field.div(&c, q.leading_coeff().unwrap())?;
                w = add_scaled(field, ord, &w[1..], &q.terms()[1..], &field.neg(&coef), &t);
                quots[k].push((t, coef));
            }
            None => {
                rem.push(w.remove(0));
            }
        }
    }
    let quots = quots
        .into_iter()
        .map(|ts| Polynomial::from_terms(ring, ts))
        .collect::<Result<Vec<_>>>()?;
    Ok((quots, Polynomial::from_sorted_terms(ring, rem)))
}

struct Elem {
    terms: Vec<Term>,
    lm: Monomial,
    sugar: u32,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine<'a> {
    ring: &'a Ring,
    field: &'a FieldConfig,
    ord: MonomialOrder,
    elems: Vec<Elem>,
    live: Vec<usize>,
    pairs: Vec<Pair>,
    trunc: Option<u32>,
}

impl<'a> Engine<'a> {
    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let d = lcm.degree();
        let a = &self.elems[i];
        let b = &self.elems[j];
        (a.sugar + d - a.lm.degree()).max(b.sugar + d - b.lm.degree())
    }

    /// Gebauer–Möller update after appending element `h`.
    fn update(&mut self, h: usize) {
        let hlm = self.elems[h].lm.clone();
        let mut cand: Vec<(usize, Monomial, bool)> = self
            .live
            .iter()
            .map(|&g| {
                let glm = &self.elems[g].lm;
                (g, glm.lcm(&hlm), glm.is_coprime(&hlm))
            })
            .collect();

        // chain criterion among the new pairs
        let mut keep: Vec<bool> = vec![true; cand.len()];
        for a in 0..cand.len() {
            if cand[a].2 {
                continue;
            }
            for b in 0..cand.len() {
                if a == b || !keep[b] {
                    continue;
                }
                if cand[b].1.divides(&cand[a].1) && (cand[b].1 != cand[a].1 || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        let mut fresh: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, c) in cand.drain(..).enumerate() {
            if keep[k] {
                fresh.push(c);
            }
        }
        // an equal-lcm group containing a coprime pair is entirely redundant
        let coprime_lcms: Vec<Monomial> = fresh.iter().filter(|c| c.2).map(|c| c.1.clone()).collect();
        fresh.retain(|c| !c.2 && !coprime_lcms.contains(&c.1));

        // old pairs made redundant by h
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if !hlm.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].lm.lcm(&hlm);
            let lj = elems[p.j].lm.lcm(&hlm);
            li == p.lcm || lj == p.lcm
        });

        for (g, lcm, _) in fresh {
            let sugar = self.pair_sugar(g, h, &lcm);
            self.pairs.push(Pair { i: g, j: h, lcm, sugar });
        }

        self.live.retain(|&g| !hlm.divides(&elems[g].lm));
        self.live.push(h);
    }

    /// Sugar selection for degree-compatible orders, smallest lcm otherwise.
    fn select(&mut self) -> Pair {
        let ord = self.ord;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let (ka, kb) = if self.trunc.is_some() {
                (a.lcm.degree(), b.lcm.degree())
            } else if ord.is_degree_compatible() {
                (a.sugar, b.sugar)
            } else {
                (0, 0)
            };
            let better = match ka.cmp(&kb) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => cmp_monomials(&a.lcm, &b.lcm, ord) == Ordering::Less,
            };
            if better {
                best = k;
            }
        }
        self.pairs.swap_remove(best)
    }

    fn reduce(&self, w: Vec<Term>, sugar: &mut u32, full: bool) -> Vec<Term> {
        let divisors: Vec<Divisor<'_>> = self
            .live
            .iter()
            .map(|&g| {
                let e = &self.elems[g];
                Divisor {
                    lm: &e.lm,
                    lm_deg: e.lm.degree(),
                    terms: &e.terms,
                    lc_inv: None,
                }
            })
            .collect();
        let sugars: Vec<u32> = self.live.iter().map(|&g| self.elems[g].sugar).collect();
        reduce_terms(
            self.field,
            self.ord,
            w,
            &divisors,
            full,
            Some((sugar, &sugars)),
            self.trunc,
        )
    }

    fn monic(&self, mut w: Vec<Term>) -> Result<Vec<Term>> {
        let lc = w[0].1.clone();
        if !self.field.is_one(&lc) {
            let inv = self.field.inv(&lc)?;
            for t in &mut w {
                t.1 = self.field.mul(&t.1, &inv);
            }
        }
        Ok(w)
    }

    fn insert(&mut self, terms: Vec<Term>, sugar: u32) {
        let lm = terms[0].0.clone();
        self.elems.push(Elem { terms, lm, sugar });
        let h = self.elems.len() - 1;
        self.update(h);
        if self.trunc.is_none() {
            self.reduce_tails(h);
        }
    }

    /// Reduces the tails of live elements having a term divisible by the
    /// leading monomial of `h`. Leading terms, and hence pairs, are unchanged.
    fn reduce_tails(&mut self, h: usize) {
        let hlm = self.elems[h].lm.clone();
        let targets: Vec<usize> = self
            .live
            .iter()
            .copied()
            .filter(|&g| g != h && self.elems[g].terms[1..].iter().any(|(m, _)| hlm.divides(m)))
            .collect();
        for g in targets {
            let tail = {
                let divisors: Vec<Divisor<'_>> = self
                    .live
                    .iter()
                    .filter(|&&o| o != g)
                    .map(|&o| {
                        let e = &self.elems[o];
                        Divisor {
                            lm: &e.lm,
                            lm_deg: e.lm.degree(),
                            terms: &e.terms,
                            lc_inv: None,
                        }
                    })
                    .collect();
                reduce_terms(
                    self.field,
                    self.ord,
                    self.elems[g].terms[1..].to_vec(),
                    &divisors,
                    true,
                    None,
                    self.trunc,
                )
            };
            let e = &mut self.elems[g];
            e.terms.truncate(1);
            e.terms.extend(tail);
        }
    }

    fn spoly(&self, p: &Pair) -> Vec<Term> {
        let a = &self.elems[p.i];
        let b = &self.elems[p.j];
        let ma = p.lcm.div(&a.lm).unwrap();
        let mb = p.lcm.div(&b.lm).unwrap();
        let first: Vec<Term> = a.terms[1..].iter().map(|(m, c)| (m.mul(&ma), c.clone())).collect();
        add_scaled(
            self.field,
            self.ord,
            &first,
            &b.terms[1..],
            &self.field.from_int(-1),
            &mb,
        )
    }

    fn run(mut self) -> Result<GroebnerBasis> {
        let limits = self.ring.limits();
        while !self.pairs.is_empty() {
            limits.check_deadline()?;
            let pair = self.select();
            if self.trunc.is_some_and(|n| pair.lcm.degree() >= n) {
                // every term of this S-polynomial lies in 𝔪^N
                continue;
            }
            if self.trunc.is_none() && pair.lcm.degree() > limits.gb_degree_cap {
                return Err(Error::Resource(format!(
                    "S-polynomial degree {} exceeds the Gröbner degree cap {}",
                    pair.lcm.degree(),
                    limits.gb_degree_cap
                )));
            }
            let s = self.spoly(&pair);
            let mut sugar = pair.sugar;
            let r = self.reduce(s, &mut sugar, true);
            if r.is_empty() {
                continue;
            }
            let r = self.monic(r)?;
            if r[0].0.is_one() {
                return Ok(unit_basis(self.ring, self.trunc));
            }
            self.insert(r, sugar);
        }
        self.finish()
    }

    fn finish(self) -> Result<GroebnerBasis> {
        let ord = self.ord;
        let mut basis: Vec<&Elem> = self.live.iter().map(|&g| &self.elems[g]).collect();
        // minimal basis: drop elements whose leading monomial is divisible by another's
        let lms: Vec<Monomial> = basis.iter().map(|e| e.lm.clone()).collect();
        let mut keep = vec![true; basis.len()];
        for a in 0..basis.len() {
            for b in 0..basis.len() {
                if a != b && keep[b] && lms[b].divides(&lms[a]) && (lms[b] != lms[a] || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        let mut k = 0;
        basis.retain(|_| {
            k += 1;
            keep[k - 1]
        });
        basis.sort_by(|a, b| cmp_monomials(&a.lm, &b.lm, ord));
        let mut out: Vec<Polynomial> = Vec::with_capacity(basis.len());
        for (idx, e) in basis.iter().enumerate() {
            let others: Vec<Divisor<'_>> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != idx)
                .map(|(_, o)| Divisor {
                    lm: &o.lm,
                    lm_deg: o.lm.degree(),
                    terms: &o.terms,
                    lc_inv: None,
                })
                .collect();
            let mut tail = reduce_terms(self.field, ord, e.terms[1..].to_vec(), &others, true, None, self.trunc);
            let mut terms = vec![e.terms[0].clone()];
            terms.append(&mut tail);
            out.push(Polynomial::from_sorted_terms(self.ring, terms));
        }
        Ok(GroebnerBasis {
            ring: self.ring.clone(),
            elements: out,
            truncation: self.trunc,
        })
    }
}

fn unit_basis(ring: &Ring, truncation: Option<u32>) -> GroebnerBasis {
    GroebnerBasis {
        ring: ring.clone(),
        elements: vec![Polynomial::one(ring)],
        truncation,
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `ring`'s
/// order. Zero generators are ignored; no generators gives the zero ideal.
pub fn buchberger(ring: &Ring, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    if !ring.order().is_global() {
        return Err(Error::InvalidArgument(format!(
            "the local order {} needs a truncation degree",
            ring.order()
        )));
    }
    run_engine(ring, gens, None)
}

/// Standard basis of `I + 𝔪^N` in `S/𝔪^N` under the local order
/// `negdegrevlex`, with the monomials of `𝔪^N` left implicit: every term of
/// degree `≥ N` is dropped. Leading monomials are lowest-degree terms, so
/// `dim_k S/(I + 𝔪^N)` is the number of monomials of degree `< N` outside
/// the leading ideal.
pub fn buchberger_truncated(ring: &Ring, gens: &[Polynomial], n: u32) -> Result<GroebnerBasis> {
    run_engine(&ring.with_order(MonomialOrder::NegDegrevlex), gens, Some(n))
}

fn run_engine(ring: &Ring, gens: &[Polynomial], trunc: Option<u32>) -> Result<GroebnerBasis> {
    let field = ring.field();
    let ord = ring.order();
    let mut engine = Engine {
        ring,
        field,
        ord,
        elems: Vec::new(),
        live: Vec::new(),
        pairs: Vec::new(),
        trunc,
    };
    // seed with inter-reduced inputs, smallest first, so early elements stay short
    let mut input: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.ring().compatible(ring) {
            return Err(Error::RingMismatch);
        }
        if !g.is_zero() {
            input.push(g.reorder(ring)?);
        }
    }
    input.sort_by(|a, b| {
        cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap(), ord)
            .then_with(|| a.len().cmp(&b.len()))
    });
    for g in input {
        let mut sugar = g.total_degree().unwrap();
        let r = engine.reduce(g.into_terms(), &mut sugar, true);
        if r.is_empty() {
            continue;
        }
        let r = engine.monic(r)?;
        if r[0].0.is_one() {
            return Ok(unit_basis(ring, trunc));
        }
        engine.insert(r, sugar);
    }
    engine.run()
}

/// Reduced Gröbner basis under an explicit order; the result lives in the
/// ring re-sorted to that order.
pub fn buchberger_with_order(ring: &Ring, gens: &[Polynomial], ord: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger(&ring.with_order(ord), gens)
}

/// `p ∈ ⟨gb⟩`.
pub fn ideal_membership(p: &Polynomial, gb: &GroebnerBasis) -> Result<bool> {
    gb.contains(&p.reorder(gb.ring())?)
}
