//! Symbolic powers `a^(m)` of radical ideals.
//!
//! Three routes are offered: saturating `a^m` at the homogeneous maximal
//! ideal (valid for unmixed one-dimensional homogeneous `a`), saturating at
//! a caller-chosen element, and intersecting powers of linear minimal primes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::idealops::{dimension, height, intersect, saturate, saturate_maximal, Ideal};
use crate::polyring::Polynomial;

#[derive(Debug, Clone)]
pub enum SymbolicMethod {
    /// `a^(m) = a^m : 𝔪^∞`.
    SaturateAtMax,
    /// `a^(m) = a^m : g^∞`.
    SaturateAtElement(Polynomial),
    /// `a^(m) = ∩ P_i^m` over the minimal primes, each generated by linear forms.
    ComponentIntersection(Vec<Ideal>),
}

impl SymbolicMethod {
    pub fn name(&self) -> &'static str {
        match self {
            SymbolicMethod::SaturateAtMax => "saturate-at-max",
            SymbolicMethod::SaturateAtElement(_) => "saturate-at-element",
            SymbolicMethod::ComponentIntersection(_) => "component-intersection",
        }
    }
}

/// Hypotheses the caller asserts about the base ideal; recorded, not proven.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityAssertions {
    pub unmixed: bool,
    pub dim_one: bool,
    pub radical_with_components: bool,
}

#[derive(Debug, Clone)]
pub struct SymbolicPowerRequest {
    pub base: Ideal,
    pub exponent: u32,
    pub method: SymbolicMethod,
    pub assertions: ValidityAssertions,
}

impl SymbolicPowerRequest {
    pub fn new(base: &Ideal, exponent: u32, method: SymbolicMethod) -> Self {
        SymbolicPowerRequest {
            base: base.clone(),
            exponent,
            method,
            assertions: ValidityAssertions::default(),
        }
    }

    pub fn with_assertions(mut self, assertions: ValidityAssertions) -> Self {
        self.assertions = assertions;
        self
    }
}

/// A computed symbolic power.
#[derive(Debug, Clone)]
pub struct SymbolicPower {
    pub ideal: Ideal,
    pub method: &'static str,
    /// Stabilization exponent of the saturation, when the route reports one.
    pub saturation_exponent: Option<u32>,
}

fn check_exponent(m: u32) -> Result<()> {
    if m == 0 {
        Err(Error::InvalidArgument(
            "symbolic power exponent must be positive".into(),
        ))
    } else {
        Ok(())
    }
}

/// Checks that every prime is generated by exactly `height` linear forms.
pub fn check_linear_primes(a: &Ideal, primes: &[Ideal]) -> Result<()> {
    if primes.is_empty() {
        return Err(Error::InvalidMethod(
            "component-intersection needs at least one prime".into(),
        ));
    }
    for p in primes {
        if !p.ring().compatible(a.ring()) {
            return Err(Error::RingMismatch);
        }
        if p.generators().iter().any(|g| g.homogeneous_degree() != Some(1)) {
            return Err(Error::InvalidMethod(format!(
                "prime {p} is not generated by linear forms"
            )));
        }
        if height(p)? != p.generators().len() {
            return Err(Error::InvalidMethod(format!(
                "generators of {p} are not a regular sequence"
            )));
        }
    }
    Ok(())
}

fn check_saturate_at_max(a: &Ideal) -> Result<()> {
    if !a.is_homogeneous() {
        return Err(Error::InvalidMethod("saturate-at-max needs a homogeneous ideal".into()));
    }
    match dimension(a)? {
        1 => Ok(()),
        d => Err(Error::InvalidMethod(format!(
            "saturate-at-max needs dim S/a = 1, found {d}"
        ))),
    }
}

/// `a^(m)` by the requested route.
pub fn symbolic_power(req: &SymbolicPowerRequest) -> Result<SymbolicPower> {
    check_exponent(req.exponent)?;
    let a = &req.base;
    let m = req.exponent;
    let name = req.method.name();
    match &req.method {
        SymbolicMethod::SaturateAtMax => {
            check_saturate_at_max(a)?;
            let ideal = if m == 1 {
                a.with_gb_generators()?
            } else {
                saturate_maximal(&a.power(m))?
            };
            Ok(SymbolicPower {
                ideal,
                method: name,
                saturation_exponent: None,
            })
        }
        SymbolicMethod::SaturateAtElement(g) => {
            let (ideal, e) = saturate(&a.power(m), g)?;
            Ok(SymbolicPower {
                ideal,
                method: name,
                saturation_exponent: Some(e),
            })
        }
        SymbolicMethod::ComponentIntersection(primes) => {
            check_linear_primes(a, primes)?;
            let mut acc: Option<Ideal> = None;
            for p in primes {
                let pm = p.power(m);
                acc = Some(match acc {
                    None => pm,
                    Some(prev) => intersect(&prev, &pm)?.with_gb_generators()?,
                });
            }
            Ok(SymbolicPower {
                ideal: acc.unwrap().with_gb_generators()?,
                method: name,
                saturation_exponent: None,
            })
        }
    }
}

/// `f ∈ a^(m)`; the component route checks `f ∈ P_i^m` prime by prime.
pub fn symbolic_membership(f: &Polynomial, req: &SymbolicPowerRequest) -> Result<bool> {
    check_exponent(req.exponent)?;
    if let SymbolicMethod::ComponentIntersection(primes) = &req.method {
        check_linear_primes(&req.base, primes)?;
        for p in primes {
            if !p.power(req.exponent).contains(f)? {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    symbolic_power(req)?.ideal.contains(f)
}

/// Comparison of `a^m` with `a^(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymbolicComparison {
    Equal,
    /// `a^m ⊊ a^(m)`, with an element of `a^(m)` outside `a^m`.
    StrictContainment {
        witness: Polynomial,
    },
}

/// Decides `a^m = a^(m)`; on strict containment returns the lowest-degree
/// reduced basis element of `a^(m)` not in `a^m`.
pub fn symbolic_vs_ordinary(req: &SymbolicPowerRequest) -> Result<SymbolicComparison> {
    let sym = symbolic_power(req)?.ideal;
    let ordinary = req.base.power(req.exponent);
    let gb = sym.gb()?;
    let mut candidates: Vec<&Polynomial> = gb.elements().iter().collect();
    candidates.sort_by_key(|g| g.total_degree());
    for g in candidates {
        if !ordinary.contains(g)? {
            return Ok(SymbolicComparison::StrictContainment { witness: g.clone() });
        }
    }
    Ok(SymbolicComparison::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::FieldConfig;
    use crate::idealops::ideal_equal;
    use crate::polyring::{parse_polynomial, MonomialOrder, Ring, RingContext};

    fn id(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    fn edge3() -> (Ring, Ideal, Vec<Ideal>) {
        let r = RingContext::rational(&["x", "y", "z"]);
        let a = id(&r, &["x*y", "x*z", "y*z"]);
        let primes = vec![id(&r, &["x", "y"]), id(&r, &["x", "z"]), id(&r, &["y", "z"])];
        (r, a, primes)
    }

    #[test]
    fn edge_ideal_second_symbolic_power() {
        let (r, a, primes) = edge3();
        let req = SymbolicPowerRequest::new(&a, 2, SymbolicMethod::ComponentIntersection(primes));
        let sym = symbolic_power(&req).unwrap().ideal;
        let xyz = parse_polynomial(&r, "x*y*z").unwrap();
        assert!(sym.contains(&xyz).unwrap());
        assert!(!a.power(2).contains(&xyz).unwrap());
        assert!(symbolic_membership(&xyz, &req).unwrap());
        assert!(!symbolic_membership(&parse_polynomial(&r, "x").unwrap(), &req).unwrap());
        assert_eq!(
            symbolic_vs_ordinary(&req).unwrap(),
            SymbolicComparison::StrictContainment { witness: xyz.clone() }
        );
        let at_max = symbolic_power(&SymbolicPowerRequest::new(&a, 2, SymbolicMethod::SaturateAtMax))
            .unwrap()
            .ideal;
        assert!(ideal_equal(&sym, &at_max).unwrap());
    }

    #[test]
    fn first_symbolic_power_is_the_ideal() {
        let (_, a, primes) = edge3();
        for method in [
            SymbolicMethod::ComponentIntersection(primes),
            SymbolicMethod::SaturateAtMax,
        ] {
            let s = symbolic_power(&SymbolicPowerRequest::new(&a, 1, method)).unwrap().ideal;
            assert!(ideal_equal(&s, &a).unwrap());
        }
    }

    #[test]
    fn equal_cases() {
        let r = RingContext::rational(&["x", "y"]);
        let m = Ideal::maximal(&r);
        let req = SymbolicPowerRequest::new(&m, 5, SymbolicMethod::ComponentIntersection(vec![m.clone()]));
        assert_eq!(symbolic_vs_ordinary(&req).unwrap(), SymbolicComparison::Equal);
        let f = id(&r, &["x + y"]);
        let req = SymbolicPowerRequest::new(&f, 3, SymbolicMethod::ComponentIntersection(vec![f.clone()]));
        assert_eq!(symbolic_vs_ordinary(&req).unwrap(), SymbolicComparison::Equal);
        let g = id(&r, &["x^2 - y^3"]);
        let req = SymbolicPowerRequest::new(
            &g,
            2,
            SymbolicMethod::SaturateAtElement(parse_polynomial(&r, "x").unwrap()),
        );
        assert_eq!(symbolic_vs_ordinary(&req).unwrap(), SymbolicComparison::Equal);
    }

    #[test]
    fn invalid_methods() {
        let r = RingContext::rational(&["x", "y"]);
        let m = Ideal::maximal(&r);
        let req = SymbolicPowerRequest::new(&m, 2, SymbolicMethod::SaturateAtMax);
        assert!(matches!(symbolic_power(&req), Err(Error::InvalidMethod(_))));
        let (_, a, _) = edge3();
        let bad = vec![id(a.ring(), &["x*y"])];
        let req = SymbolicPowerRequest::new(&a, 2, SymbolicMethod::ComponentIntersection(bad));
        assert!(matches!(symbolic_power(&req), Err(Error::InvalidMethod(_))));
        let req = SymbolicPowerRequest::new(&a, 0, SymbolicMethod::SaturateAtMax);
        assert!(symbolic_power(&req).is_err());
    }

    #[test]
    fn fermat_cube_routes_agree() {
        let q = FieldConfig::cyclotomic(3);
        let r = RingContext::new(q, &["x", "y", "z"], MonomialOrder::Grevlex).unwrap();
        let j = id(&r, &["x*(y^3-z^3)", "y*(z^3-x^3)", "z*(x^3-y^3)"]);
        let mut primes = Vec::new();
        for i in 0..3 {
            for k in 0..3 {
                primes.push(id(&r, &[&format!("y - t^{i}*z"), &format!("z - t^{k}*x")]));
            }
        }
        for pair in [["y", "z"], ["x", "z"], ["x", "y"]] {
            primes.push(id(&r, &pair));
        }
        let by_max = symbolic_power(&SymbolicPowerRequest::new(&j, 3, SymbolicMethod::SaturateAtMax)).unwrap();
        let by_primes = symbolic_power(&SymbolicPowerRequest::new(
            &j,
            3,
            SymbolicMethod::ComponentIntersection(primes),
        ))
        .unwrap();
        assert!(ideal_equal(&by_max.ideal, &by_primes.ideal).unwrap());
    }
}
