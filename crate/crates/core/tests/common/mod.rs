//! Strategies and property bodies shared by the property suite and the
//! acceptance runner.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use symrees::exactnum::{FieldConfig, Rational};
use symrees::groebner::normal_form;
use symrees::hilbert::{count_below_degree, hilbert_series_monomial, monomials_of_degree};
use symrees::idealops::{
    colon, dimension, ideal_equal, intersect, intersect_by_elimination, intersect_monomial, saturate,
    saturate_by_extra_variable, saturate_by_variable, Ideal,
};
use symrees::polyring::{Monomial, Polynomial, Ring, RingContext};
use symrees::symbolic::{symbolic_power, SymbolicMethod, SymbolicPowerRequest};

pub type TermData = (i64, Vec<u32>);
pub type PolyData = Vec<TermData>;

pub const VARS: [&str; 3] = ["x", "y", "z"];

pub fn ring3() -> Ring {
    RingContext::rational(&VARS)
}

pub fn term_data(max_exp: u32) -> impl Strategy<Value = TermData> {
    (-3i64..=3, prop::collection::vec(0..=max_exp, 3))
}

pub fn poly_data() -> impl Strategy<Value = PolyData> {
    prop::collection::vec(term_data(2), 1..=3)
}

pub fn ideal_data() -> impl Strategy<Value = Vec<PolyData>> {
    prop::collection::vec(poly_data(), 1..=3)
}

/// Up to three generators of at most two terms each, for properties that go
/// through elimination.
pub fn binomial_ideal_data() -> impl Strategy<Value = Vec<PolyData>> {
    prop::collection::vec(prop::collection::vec(term_data(2), 1..=2), 1..=3)
}

pub fn monomial_data() -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..=3, 3), 1..=4)
}

pub fn build_poly(ring: &Ring, data: &PolyData) -> Polynomial {
    data.iter().fold(Polynomial::zero(ring), |acc, (c, e)| {
        &acc + &(&Polynomial::from_int(ring, *c) * &Polynomial::monomial(ring, Monomial::from_exponents(e)))
    })
}

/// Ideal of the nonzero polynomials in `data`; `None` when all vanish.
pub fn build_ideal(ring: &Ring, data: &[PolyData]) -> Option<Ideal> {
    let gens: Vec<Polynomial> = data
        .iter()
        .map(|d| build_poly(ring, d))
        .filter(|p| !p.is_zero())
        .collect();
    if gens.is_empty() {
        None
    } else {
        Some(Ideal::new(ring, gens).unwrap())
    }
}

pub fn build_monomial_ideal(ring: &Ring, data: &[Vec<u32>]) -> Ideal {
    let gens = data
        .iter()
        .map(|e| Polynomial::monomial(ring, Monomial::from_exponents(e)))
        .collect();
    Ideal::new(ring, gens).unwrap()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

/// Normal forms are idempotent, differ from the input by an ideal element
/// and vanish on the generators.
pub fn gb_normal_forms(ideal: &[PolyData], p: &PolyData) -> Result<(), TestCaseError> {
    let r = ring3();
    let Some(i) = build_ideal(&r, ideal) else { return Ok(()) };
    let gb = i.gb().unwrap();
    let f = build_poly(&r, p);
    let nf = normal_form(&f, gb.elements()).unwrap();
    check(normal_form(&nf, gb.elements()).unwrap() == nf, || {
        format!("normal form of {f} not idempotent")
    })?;
    check(i.contains(&(&f - &nf)).unwrap(), || {
        format!("{f} - NF({f}) outside the ideal")
    })?;
    for g in i.generators() {
        check(gb.reduce(g).unwrap().is_zero(), || {
            format!("generator {g} does not reduce to zero")
        })?;
    }
    Ok(())
}

/// Reduced bases agree under reversing and rotating the generators.
pub fn gb_order_independent(ideal: &[PolyData]) -> Result<(), TestCaseError> {
    let r = ring3();
    let Some(i) = build_ideal(&r, ideal) else { return Ok(()) };
    let base = i.gb().unwrap().elements().to_vec();
    let mut gens = i.generators().to_vec();
    gens.reverse();
    let rev = Ideal::new(&r, gens.clone()).unwrap().gb().unwrap().elements().to_vec();
    check(rev == base, || {
        format!("reversed generators give {rev:?}, expected {base:?}")
    })?;
    gens.rotate_left(1);
    let rot = Ideal::new(&r, gens).unwrap().gb().unwrap().elements().to_vec();
    check(rot == base, || {
        format!("rotated generators give {rot:?}, expected {base:?}")
    })
}

/// Monomial shortcuts agree with the general elimination routes.
pub fn monomial_fast_paths(a: &[Vec<u32>], b: &[Vec<u32>], v: usize) -> Result<(), TestCaseError> {
    let r = ring3();
    let i = build_monomial_ideal(&r, a);
    let j = build_monomial_ideal(&r, b);
    let fast = intersect_monomial(&i, &j);
    let slow = intersect_by_elimination(&i, &j).unwrap();
    check(ideal_equal(&fast, &slow).unwrap(), || {
        format!("intersections differ: {fast} vs {slow}")
    })?;
    let sv = saturate_by_variable(&i, v).unwrap();
    let se = saturate_by_extra_variable(&i, &Polynomial::var(&r, v)).unwrap();
    check(ideal_equal(&sv, &se).unwrap(), || {
        format!("saturations differ: {sv} vs {se}")
    })?;
    if a.iter().any(|e| e.iter().all(|&k| k == 0)) {
        return Ok(());
    }
    let hs = hilbert_series_monomial(&i).unwrap();
    let lead: Vec<Monomial> = i
        .generators()
        .iter()
        .map(|g| g.leading_monomial().unwrap().clone())
        .collect();
    for d in 0..=4u32 {
        let brute = monomials_of_degree(3, d)
            .iter()
            .filter(|m| !lead.iter().any(|l| l.divides(m)))
            .count() as u64;
        let counted = count_below_degree(&lead, 3, d + 1) - count_below_degree(&lead, 3, d);
        check(brute == counted, || {
            format!("degree {d}: {brute} standard monomials, counted {counted}")
        })?;
        let series: i64 = hs
            .numerator
            .iter()
            .enumerate()
            .filter(|&(k, _)| k as u32 <= d)
            .map(|(k, h)| h * binomial2(d as i64 - k as i64 + 2))
            .sum();
        check(series == brute as i64, || {
            format!("degree {d}: series gives {series}, brute force {brute}")
        })?;
    }
    Ok(())
}

fn binomial2(m: i64) -> i64 {
    m * (m - 1) / 2
}

pub type CoeffData = Vec<(i64, i64)>;

pub fn coeff_data(degree: usize) -> impl Strategy<Value = CoeffData> {
    prop::collection::vec((-9i64..=9, 1i64..=5), degree)
}

/// Field axioms in `ℚ` and in the cyclotomic fields of orders 3 and 5.
pub fn field_axioms(order: u32, a: &CoeffData, b: &CoeffData, c: &CoeffData) -> Result<(), TestCaseError> {
    let f = if order == 1 {
        FieldConfig::rationals()
    } else {
        FieldConfig::cyclotomic(order)
    };
    let d = f.degree();
    let mk = |v: &CoeffData| f.from_coefficients(v[..d].iter().map(|&(n, m)| Rational::new(n, m).unwrap()).collect());
    let (a, b, c) = (mk(a), mk(b), mk(c));
    check(f.add(&f.add(&a, &b), &c) == f.add(&a, &f.add(&b, &c)), || {
        "addition not associative".into()
    })?;
    check(f.mul(&f.mul(&a, &b), &c) == f.mul(&a, &f.mul(&b, &c)), || {
        "multiplication not associative".into()
    })?;
    check(f.mul(&a, &b) == f.mul(&b, &a), || {
        "multiplication not commutative".into()
    })?;
    check(
        f.mul(&a, &f.add(&b, &c)) == f.add(&f.mul(&a, &b), &f.mul(&a, &c)),
        || "not distributive".into(),
    )?;
    check(f.is_zero(&f.add(&a, &f.neg(&a))), || "a + (-a) ≠ 0".into())?;
    check(f.mul(&a, &f.one()) == a, || "a·1 ≠ a".into())?;
    if !f.is_zero(&a) {
        let inv = f.inv(&a).unwrap();
        check(f.is_one(&f.mul(&a, &inv)), || "a·a⁻¹ ≠ 1".into())?;
        check(f.div(&f.mul(&b, &a), &a).unwrap() == b, || "(b·a)/a ≠ b".into())?;
    } else {
        check(f.inv(&a).is_err(), || "zero has an inverse".into())?;
    }
    Ok(())
}

/// `(I : g^∞) : g^∞ = I : g^∞`, `I : g ⊆ I : g^∞` and the reported exponent
/// is the least `e` with `g^e · (I : g^∞) ⊆ I`.
pub fn saturation_idempotent(ideal: &[PolyData], g: &PolyData) -> Result<(), TestCaseError> {
    let r = ring3();
    let Some(i) = build_ideal(&r, ideal) else { return Ok(()) };
    let g = build_poly(&r, g);
    if g.is_zero() {
        return Ok(());
    }
    let (s, e) = saturate(&i, &g).unwrap();
    let (ss, _) = saturate(&s, &g).unwrap();
    check(ideal_equal(&s, &ss).unwrap(), || {
        format!("saturation not idempotent: {s} vs {ss}")
    })?;
    check(s.contains_ideal(&i).unwrap(), || {
        "I not contained in its saturation".into()
    })?;
    let one_step = colon(&i, &g).unwrap();
    check(s.contains_ideal(&one_step).unwrap(), || {
        format!("I : g = {one_step} not inside {s}")
    })?;
    let scaled = |k: u32| Ideal::new(&r, s.generators().iter().map(|h| h * &g.pow(k)).collect()).unwrap();
    check(i.contains_ideal(&scaled(e)).unwrap(), || {
        format!("g^{e} · (I : g^∞) not inside I")
    })?;
    if e > 0 {
        check(!i.contains_ideal(&scaled(e - 1)).unwrap(), || {
            format!("exponent {e} is not the least")
        })?;
    } else {
        check(ideal_equal(&s, &i).unwrap(), || {
            "exponent 0 but I : g^∞ differs from I".into()
        })?;
    }
    Ok(())
}

/// `I ∩ J` lies in both `I` and `J` and contains `I·J`.
pub fn intersection_bounds(a: &[PolyData], b: &[PolyData]) -> Result<(), TestCaseError> {
    let r = ring3();
    let (Some(i), Some(j)) = (build_ideal(&r, a), build_ideal(&r, b)) else {
        return Ok(());
    };
    let k = intersect(&i, &j).unwrap();
    check(i.contains_ideal(&k).unwrap() && j.contains_ideal(&k).unwrap(), || {
        format!("{k} not inside {i} and {j}")
    })?;
    check(k.contains_ideal(&i.product(&j).unwrap()).unwrap(), || {
        "I·J not inside I ∩ J".into()
    })
}

/// Krull dimension of a monomial ideal against a brute-force search for the
/// largest set of variables containing no generator's support.
pub fn dimension_brute_force(a: &[Vec<u32>]) -> Result<(), TestCaseError> {
    let r = ring3();
    let i = build_monomial_ideal(&r, a);
    if a.iter().any(|e| e.iter().all(|&k| k == 0)) {
        return Ok(());
    }
    let mut best = 0;
    for mask in 0u32..8 {
        let free = |e: &Vec<u32>| (0..3).all(|v| e[v] == 0 || mask & (1 << v) != 0);
        if !a.iter().any(free) {
            best = best.max(mask.count_ones() as usize);
        }
    }
    let d = dimension(&i).unwrap();
    check(d == best, || format!("dimension {d}, brute force {best}"))?;
    let gi = i.initial_ideal().unwrap();
    check(dimension(&gi).unwrap() == d, || {
        "initial ideal changes the dimension".into()
    })
}

pub fn ring4() -> Ring {
    RingContext::rational(&["a", "b", "c", "d"])
}

/// The six edges of the complete graph on four vertices.
pub const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Edge ideal of the graph whose edges are selected by the bits of `mask`,
/// together with its minimal primes from a brute-force vertex-cover search.
pub fn edge_ideal(mask: u8) -> (Ring, Ideal, Vec<Ideal>) {
    let r = ring4();
    let edges: Vec<(usize, usize)> = EDGES
        .iter()
        .enumerate()
        .filter(|(k, _)| mask & (1 << k) != 0)
        .map(|(_, e)| *e)
        .collect();
    let gens = edges
        .iter()
        .map(|&(i, j)| &Polynomial::var(&r, i) * &Polynomial::var(&r, j))
        .collect();
    let covers: Vec<u32> = (0u32..16)
        .filter(|c| edges.iter().all(|&(i, j)| c & (1 << i) != 0 || c & (1 << j) != 0))
        .collect();
    let minimal: Vec<u32> = covers
        .iter()
        .copied()
        .filter(|&c| !covers.iter().any(|&d| d != c && d & c == d))
        .collect();
    let primes = minimal
        .iter()
        .map(|&c| {
            Ideal::new(
                &r,
                (0..4)
                    .filter(|v| c & (1 << v) != 0)
                    .map(|v| Polynomial::var(&r, v))
                    .collect(),
            )
            .unwrap()
        })
        .collect();
    (r.clone(), Ideal::new(&r, gens).unwrap(), primes)
}

/// `a^m ⊆ a^(m)` for edge ideals through the component route.
pub fn symbolic_contains_ordinary_monomial(mask: u8, m: u32) -> Result<(), TestCaseError> {
    if mask == 0 {
        return Ok(());
    }
    let (_, a, primes) = edge_ideal(mask);
    let req = SymbolicPowerRequest::new(&a, m, SymbolicMethod::ComponentIntersection(primes));
    let sym = symbolic_power(&req).unwrap().ideal;
    check(sym.contains_ideal(&a.power(m)).unwrap(), || {
        format!("{a}^{m} not inside its symbolic power")
    })
}

/// `a^m ⊆ a^m : (xyz)^∞` for binomial ideals.
pub fn symbolic_contains_ordinary_binomial(bins: &[(Vec<u32>, Vec<u32>)], m: u32) -> Result<(), TestCaseError> {
    let r = ring3();
    let gens: Vec<Polynomial> = bins
        .iter()
        .map(|(u, v)| {
            &Polynomial::monomial(&r, Monomial::from_exponents(u))
                - &Polynomial::monomial(&r, Monomial::from_exponents(v))
        })
        .filter(|p| !p.is_zero())
        .collect();
    if gens.is_empty() {
        return Ok(());
    }
    let a = Ideal::new(&r, gens).unwrap();
    let g = Polynomial::monomial(&r, Monomial::from_exponents(&[1, 1, 1]));
    let req = SymbolicPowerRequest::new(&a, m, SymbolicMethod::SaturateAtElement(g));
    let sym = symbolic_power(&req).unwrap().ideal;
    check(sym.contains_ideal(&a.power(m)).unwrap(), || {
        format!("{a}^{m} not inside a^{m} : (xyz)^∞")
    })
}

pub fn binomial_data() -> impl Strategy<Value = Vec<(Vec<u32>, Vec<u32>)>> {
    let exps = || prop::collection::vec(0u32..=2, 3);
    prop::collection::vec((exps(), exps()), 1..=2)
}
