//! Multiplicity criterion checks for symbolic Rees algebras, reduction
//! tests, analytic spread and set-theoretic complete-intersection
//! certificates.
//!
//! The ambient local ring is always `R = S_𝔪` for a polynomial ring `S` over
//! ℚ or a cyclotomic field, localized at the ideal of the origin.

use std::thread;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::FamilyInstance;
use crate::hilbert::{artinian_length, local_length_at_origin, multiplicity_of_graded_sop, GradedSopMultiplicity};
use crate::idealops::{dimension, eliminate, height, ideal_equal, radical_membership, Ideal};
use crate::polyring::{MonomialOrder, Polynomial, Ring};
use crate::symbolic::{symbolic_membership, SymbolicMethod, SymbolicPowerRequest};

/// Restriction recorded on every report.
pub const AMBIENT_RING_NOTE: &str =
    "R = S localized at the origin, S a polynomial ring; R is regular, hence Cohen-Macaulay and quasi-unmixed";

/// Data for one criterion check: `a`, its minimal primes with the
/// multiplicities `e_{aR_P}(R_P)`, and a candidate `x̲, f̲` with levels.
#[derive(Debug, Clone)]
pub struct CriterionInput {
    pub ideal: Ideal,
    pub primes: Vec<Ideal>,
    pub localization_multiplicities: Vec<i64>,
    pub sop_x: Vec<Polynomial>,
    pub sop_f: Vec<(Polynomial, u32)>,
}

impl CriterionInput {
    pub fn from_instance(inst: &FamilyInstance) -> Self {
        CriterionInput {
            ideal: inst.ideal.clone(),
            primes: inst.minimal_primes.clone(),
            localization_multiplicities: inst.localization_multiplicities.clone(),
            sop_x: inst.sop_x.clone(),
            sop_f: inst.sop_f.clone(),
        }
    }

    fn symbolic_method(&self) -> SymbolicMethod {
        if self.primes.is_empty() {
            SymbolicMethod::SaturateAtMax
        } else {
            SymbolicMethod::ComponentIntersection(self.primes.clone())
        }
    }

    fn validate(&self) -> Result<()> {
        if self.primes.is_empty() {
            return Err(Error::InvalidArgument("criterion needs the minimal primes of a".into()));
        }
        if self.primes.len() != self.localization_multiplicities.len() {
            return Err(Error::LengthMismatch {
                expected: self.primes.len(),
                found: self.localization_multiplicities.len(),
            });
        }
        if let Some(e) = self.localization_multiplicities.iter().find(|&&e| e < 1) {
            return Err(Error::InvalidArgument(format!(
                "localization multiplicity {e} is not positive"
            )));
        }
        if let Some((f, _)) = self.sop_f.iter().find(|(_, k)| *k == 0) {
            return Err(Error::InvalidArgument(format!("level of {f} must be positive")));
        }
        let ring = self.ideal.ring();
        let all = self.sop_x.iter().chain(self.sop_f.iter().map(|(f, _)| f));
        if all.clone().any(|p| !p.ring().compatible(ring)) || self.primes.iter().any(|p| !p.ring().compatible(ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LhsMethod {
    GradedLength,
    LocalLengthAtOrigin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsolationRoute {
    GradedDimension,
    LocalLength,
}

/// Outcome of [`verify_sop`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SopReport {
    pub dim_quotient: usize,
    pub x_count: usize,
    pub f_count: usize,
    /// `dim S/(a + x̲)`, absent when `a + x̲` is the unit ideal.
    pub dim_after_x: Option<usize>,
    pub x_is_sop_mod_a: bool,
    pub origin_isolated: bool,
    pub isolation_route: IsolationRoute,
    pub local_length: Option<u64>,
    pub passed: bool,
    pub details: Vec<String>,
}

/// Checks that `x̲` is a sop for `S/a` and that `(x̲, f̲)` has the origin as
/// an isolated zero.
pub fn verify_sop(a: &Ideal, x: &[Polynomial], f: &[Polynomial]) -> Result<SopReport> {
    let ring = a.ring();
    let n = ring.nvars();
    if x.len() + f.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: x.len() + f.len(),
        });
    }
    let mut details = Vec::new();
    let dim_quotient = dimension(a)?;
    if x.len() != dim_quotient {
        details.push(format!("|x| = {} but dim S/a = {dim_quotient}", x.len()));
    }
    let dim_after_x = match dimension(&a.add_generators(x)?) {
        Ok(d) => Some(d),
        Err(Error::UnitIdeal) => None,
        Err(e) => return Err(e),
    };
    match dim_after_x {
        Some(0) => {}
        Some(d) => details.push(format!("dim S/(a + x) = {d}")),
        None => details.push("a + x is the unit ideal".into()),
    }
    let x_is_sop_mod_a = x.len() == dim_quotient && dim_after_x == Some(0);

    let all: Vec<Polynomial> = x.iter().chain(f).cloned().collect();
    let q = Ideal::new(ring, all)?;
    let homogeneous = q
        .generators()
        .iter()
        .all(|g| g.homogeneous_degree().is_some_and(|d| d > 0));
    let (origin_isolated, isolation_route, local_length) = if homogeneous {
        let ok = dimension(&q)? == 0;
        (
            ok,
            IsolationRoute::GradedDimension,
            if ok { Some(artinian_length(&q)?) } else { None },
        )
    } else {
        match local_length_at_origin(&q) {
            Ok(l) if l.length > 0 => (true, IsolationRoute::LocalLength, Some(l.length)),
            Ok(_) => (false, IsolationRoute::LocalLength, Some(0)),
            Err(Error::Resource(msg)) => {
                details.push(format!("local length: {msg}"));
                (false, IsolationRoute::LocalLength, None)
            }
            Err(e) => return Err(e),
        }
    };
    if !origin_isolated {
        details.push("the origin is not an isolated zero of (x, f)".into());
    }
    Ok(SopReport {
        dim_quotient,
        x_count: x.len(),
        f_count: f.len(),
        dim_after_x,
        x_is_sop_mod_a,
        origin_isolated,
        isolation_route,
        local_length,
        passed: x_is_sop_mod_a && origin_isolated,
        details,
    })
}

/// One minimal prime's contribution `e_i · e_x̲(R/P_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRow {
    pub prime: Vec<String>,
    pub localization_multiplicity: i64,
    /// `e_x̲(R/P)`.
    pub sop_multiplicity: i64,
    /// `λ(S/(P + x̲))`.
    pub length: u64,
    pub cm_witness: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipRow {
    pub element: String,
    pub level: u32,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideChecks {
    pub sop: SopReport,
    pub memberships: Vec<MembershipRow>,
    pub symbolic_method: String,
    pub ideal_homogeneous: bool,
    pub sop_x_homogeneous: bool,
    pub sop_f_homogeneous: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum Verdict {
    Equal,
    Unequal { difference: i64 },
}

impl Verdict {
    pub fn from_sides(lhs: i64, rhs: i64) -> Verdict {
        if lhs == rhs {
            Verdict::Equal
        } else {
            Verdict::Unequal { difference: lhs - rhs }
        }
    }

    pub fn is_equal(self) -> bool {
        self == Verdict::Equal
    }
}

/// Full record of one criterion check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    /// `e_{(x̲, f̲)}(R)`.
    pub lhs: u64,
    pub lhs_method: LhsMethod,
    pub lhs_stabilized_at: Option<u32>,
    /// `(∏ k_j) · Σ e_i · e_x̲(R/P_i)`.
    pub rhs: i64,
    pub level_product: i64,
    pub rows: Vec<PrimeRow>,
    pub side_checks: SideChecks,
    pub verdict: Verdict,
    pub ambient: String,
}

impl CriterionReport {
    /// Right-hand side recomputed from the rows with every level scaled by `factor`.
    pub fn rhs_with_scaled_levels(&self, levels: &[u32], factor: u32) -> i64 {
        let prod: i64 = levels.iter().map(|&k| (k * factor) as i64).product();
        prod * self
            .rows
            .iter()
            .map(|r| r.localization_multiplicity * r.sop_multiplicity)
            .sum::<i64>()
    }
}

fn is_form(p: &Polynomial) -> bool {
    p.homogeneous_degree().is_some_and(|d| d > 0)
}

fn prime_rows(x: &[Polynomial], primes: &[Ideal]) -> Result<Vec<GradedSopMultiplicity>> {
    thread::scope(|s| {
        let handles: Vec<_> = primes
            .iter()
            .map(|p| s.spawn(move || multiplicity_of_graded_sop(x, p)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("prime row worker panicked"))
            .collect()
    })
}

/// Compares `e_{(x̲,f̲)}(R)` with `(∏ k_j) · Σ e_i · e_x̲(R/P_i)`.
pub fn check_criterion(input: &CriterionInput) -> Result<CriterionReport> {
    input.validate()?;
    let a = &input.ideal;
    let fs: Vec<Polynomial> = input.sop_f.iter().map(|(f, _)| f.clone()).collect();
    let sop = verify_sop(a, &input.sop_x, &fs)?;
    if !sop.passed {
        return Err(Error::NotASop(sop.details.join("; ")));
    }

    let method = input.symbolic_method();
    let mut memberships = Vec::new();
    for (f, k) in &input.sop_f {
        let req = SymbolicPowerRequest::new(a, *k, method.clone());
        let holds = symbolic_membership(f, &req)?;
        if !holds {
            return Err(Error::Containment(format!("{f} ∉ a^({k})")));
        }
        memberships.push(MembershipRow {
            element: f.to_string(),
            level: *k,
            holds,
        });
    }

    let sop_x_homogeneous = input.sop_x.iter().all(is_form);
    let sop_f_homogeneous = fs.iter().all(is_form);
    let q = Ideal::new(a.ring(), input.sop_x.iter().chain(&fs).cloned().collect())?;
    let (lhs, lhs_method, lhs_stabilized_at) = if sop_x_homogeneous && sop_f_homogeneous {
        (artinian_length(&q)?, LhsMethod::GradedLength, None)
    } else {
        let l = local_length_at_origin(&q)?;
        (l.length, LhsMethod::LocalLengthAtOrigin, Some(l.stabilized_at))
    };

    let per_prime = prime_rows(&input.sop_x, &input.primes)?;
    let rows: Vec<PrimeRow> = input
        .primes
        .iter()
        .zip(&input.localization_multiplicities)
        .zip(per_prime)
        .map(|((p, &e), m)| PrimeRow {
            prime: p.generators().iter().map(|g| g.to_string()).collect(),
            localization_multiplicity: e,
            sop_multiplicity: m.product_value,
            length: m.length,
            cm_witness: m.cm_witness,
        })
        .collect();
    let level_product: i64 = input.sop_f.iter().map(|(_, k)| *k as i64).product();
    let rhs = level_product
        * rows
            .iter()
            .map(|r| r.localization_multiplicity * r.sop_multiplicity)
            .sum::<i64>();

    Ok(CriterionReport {
        lhs,
        lhs_method,
        lhs_stabilized_at,
        rhs,
        level_product,
        rows,
        side_checks: SideChecks {
            sop,
            memberships,
            symbolic_method: method.name().to_string(),
            ideal_homogeneous: a.is_homogeneous(),
            sop_x_homogeneous,
            sop_f_homogeneous,
        },
        verdict: Verdict::from_sides(lhs as i64, rhs),
        ambient: AMBIENT_RING_NOTE.to_string(),
    })
}

/// Outcome of [`check_reduction`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum ReductionResult {
    ReductionAt { r: u32 },
    NotVerified { r_max: u32 },
}

impl ReductionResult {
    pub fn is_reduction(self) -> bool {
        matches!(self, ReductionResult::ReductionAt { .. })
    }
}

/// Smallest `r ≤ r_max` with `J·I^r = I^(r+1)`.
pub fn check_reduction(j: &Ideal, i: &Ideal, r_max: u32) -> Result<ReductionResult> {
    if !j.ring().compatible(i.ring()) {
        return Err(Error::RingMismatch);
    }
    if !i.contains_ideal(j)? {
        return Err(Error::Containment("J is not contained in I".into()));
    }
    let mut ir = Ideal::unit(i.ring());
    for r in 0..=r_max {
        i.ring().limits().check_deadline()?;
        let next = ir.product(i)?;
        if ideal_equal(&j.product(&ir)?, &next)? {
            return Ok(ReductionResult::ReductionAt { r });
        }
        ir = next;
    }
    Ok(ReductionResult::NotVerified { r_max })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpreadRoute {
    /// Kernel of `k[y] → k[g]`, for generators of one common degree.
    SubalgebraKernel,
    /// Rees algebra presentation modulo `𝔪`, for mixed degrees.
    ReesModMaximal,
}

/// Outcome of [`analytic_spread`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyticSpread {
    pub value: usize,
    pub route: SpreadRoute,
    /// Set when the generators are forms of one common degree.
    pub equal_degree: bool,
}

fn spread_ring(i: &Ideal, extra: &[&str]) -> Result<(Ring, Vec<usize>)> {
    let ring = i.ring();
    let names: Vec<String> = extra
        .iter()
        .flat_map(|stem| {
            let m = if *stem == "y" { i.generators().len() } else { 1 };
            (1..=m).map(move |k| {
                if *stem == "y" {
                    format!("y{k}")
                } else {
                    stem.to_string()
                }
            })
        })
        .map(|nm| {
            if ring.var_index(&nm).is_ok() {
                ring.fresh_name(&nm)
            } else {
                nm
            }
        })
        .collect();
    let shift: Vec<usize> = (names.len()..names.len() + ring.nvars()).collect();
    Ok((ring.extend_front(&names, MonomialOrder::Grevlex)?, shift))
}

/// Analytic spread `ℓ(I)`, the Krull dimension of the fiber cone
/// `⊕ I^n/𝔪I^n`.
pub fn analytic_spread(i: &Ideal) -> Result<AnalyticSpread> {
    let gens = i.generators();
    if gens.is_empty() {
        return Ok(AnalyticSpread {
            value: 0,
            route: SpreadRoute::SubalgebraKernel,
            equal_degree: true,
        });
    }
    let degrees: Vec<Option<u32>> = gens.iter().map(|g| g.homogeneous_degree()).collect();
    let equal_degree = degrees[0].is_some_and(|d| d > 0) && degrees.iter().all(|d| *d == degrees[0]);
    let m = gens.len();
    let n = i.ring().nvars();
    if equal_degree {
        // y_1..y_m, then the original variables
        let (big, shift) = spread_ring(i, &["y"])?;
        let rel: Vec<Polynomial> = gens
            .iter()
            .enumerate()
            .map(|(k, g)| Ok(&Polynomial::var(&big, k) - &g.map_into(&big, &shift)?))
            .collect::<Result<_>>()?;
        let kernel = eliminate(&Ideal::new(&big, rel)?, &shift)?;
        let value = dimension(&kernel)?;
        return Ok(AnalyticSpread {
            value,
            route: SpreadRoute::SubalgebraKernel,
            equal_degree,
        });
    }
    // t, y_1..y_m, then the original variables
    let (big, shift) = spread_ring(i, &["t", "y"])?;
    let t = Polynomial::var(&big, 0);
    let rel: Vec<Polynomial> = gens
        .iter()
        .enumerate()
        .map(|(k, g)| Ok(&Polynomial::var(&big, k + 1) - &(&g.map_into(&big, &shift)? * &t)))
        .collect::<Result<_>>()?;
    let rees = eliminate(&Ideal::new(&big, rel)?, &[0])?;
    let xs: Vec<Polynomial> = (m..m + n).map(|v| Polynomial::var(rees.ring(), v)).collect();
    let value = dimension(&rees.add_generators(&xs)?)?;
    Ok(AnalyticSpread {
        value,
        route: SpreadRoute::ReesModMaximal,
        equal_degree,
    })
}

/// Outcome of [`stci_certificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StciReport {
    pub height: usize,
    pub count_matches_height: bool,
    /// Every generator of `a` lies in `√(f̲)`.
    pub a_in_radical_of_f: bool,
    /// Every `f` lies in `√a`.
    pub f_in_radical_of_a: bool,
    pub holds: bool,
}

/// Certifies `√a = √(f̲)` with `|f̲| = ht a`.
pub fn stci_certificate(a: &Ideal, f: &[Polynomial]) -> Result<StciReport> {
    let height = height(a)?;
    let count_matches_height = f.len() == height;
    let fi = Ideal::new(a.ring(), f.to_vec())?;
    let mut a_in_radical_of_f = true;
    for g in a.generators() {
        if !radical_membership(g, &fi)? {
            a_in_radical_of_f = false;
            break;
        }
    }
    let mut f_in_radical_of_a = true;
    for g in fi.generators() {
        if !radical_membership(g, a)? {
            f_in_radical_of_a = false;
            break;
        }
    }
    Ok(StciReport {
        height,
        count_matches_height,
        a_in_radical_of_f,
        f_in_radical_of_a,
        holds: count_matches_height && a_in_radical_of_f && f_in_radical_of_a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{edge_complete, jacobian_arrangement};
    use crate::polyring::{parse_polynomial, RingContext};

    fn id(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn edge_three_is_equal() {
        let inst = edge_complete(3).unwrap();
        let rep = check_criterion(&CriterionInput::from_instance(&inst)).unwrap();
        assert_eq!(rep.lhs, 6);
        assert_eq!(rep.rhs, 6);
        assert_eq!(rep.level_product, 2);
        assert_eq!(rep.lhs_method, LhsMethod::GradedLength);
        assert!(rep.rows.iter().all(|r| r.sop_multiplicity == 1 && r.cm_witness));
        assert!(rep.verdict.is_equal());
        assert_eq!(rep.rhs_with_scaled_levels(&[1, 2], 2), 4 * rep.rhs);
    }

    #[test]
    fn jacobian_is_equal() {
        let inst = jacobian_arrangement().unwrap();
        let rep = check_criterion(&CriterionInput::from_instance(&inst)).unwrap();
        assert_eq!((rep.lhs, rep.rhs), (6, 6));
        assert_eq!(rep.rows.len(), 3);
        assert!(rep.verdict.is_equal());
    }

    #[test]
    fn wrong_level_breaks_membership() {
        let inst = edge_complete(3).unwrap();
        let mut input = CriterionInput::from_instance(&inst);
        input.sop_f[1].1 = 3;
        assert!(matches!(check_criterion(&input), Err(Error::Containment(_))));
    }

    #[test]
    fn sop_reports() {
        let r = RingContext::rational(&["x", "y"]);
        let a = id(&r, &["x"]);
        let rep = verify_sop(&a, &[p(&r, "x + y")], &[p(&r, "x")]).unwrap();
        assert!(rep.passed);
        let bad = verify_sop(&a, &[p(&r, "x")], &[p(&r, "x + y")]).unwrap();
        assert!(!bad.x_is_sop_mod_a);
        assert!(!bad.passed);
        assert!(matches!(
            verify_sop(&a, &[], &[p(&r, "x")]),
            Err(Error::LengthMismatch { .. })
        ));
        let inh = verify_sop(&a, &[p(&r, "y")], &[p(&r, "x + y^2")]).unwrap();
        assert_eq!(inh.isolation_route, IsolationRoute::LocalLength);
        assert_eq!(inh.local_length, Some(1));
        assert!(inh.passed);
    }

    #[test]
    fn reductions() {
        let r = RingContext::rational(&["x", "y"]);
        let i = id(&r, &["x", "y"]).power(2);
        let j = id(&r, &["x^2", "y^2"]);
        assert_eq!(
            check_reduction(&j, &i, 3).unwrap(),
            ReductionResult::ReductionAt { r: 1 }
        );
        assert_eq!(
            check_reduction(&i, &i, 3).unwrap(),
            ReductionResult::ReductionAt { r: 0 }
        );
        assert_eq!(
            check_reduction(&id(&r, &["x^2"]), &i, 4).unwrap(),
            ReductionResult::NotVerified { r_max: 4 }
        );
        assert!(matches!(
            check_reduction(&id(&r, &["x"]), &i, 1),
            Err(Error::Containment(_))
        ));
    }

    #[test]
    fn spreads() {
        let r = RingContext::rational(&["x", "y"]);
        let m = id(&r, &["x", "y"]);
        assert_eq!(analytic_spread(&m).unwrap().value, 2);
        assert_eq!(analytic_spread(&id(&r, &["x^2 + x*y"])).unwrap().value, 1);
        assert_eq!(analytic_spread(&m.power(3)).unwrap().value, 2);
        let r3 = RingContext::rational(&["x", "y", "z"]);
        let edge = id(&r3, &["x*y", "x*z", "y*z"]);
        assert_eq!(analytic_spread(&edge).unwrap().value, 3);
        let mixed = analytic_spread(&id(&r, &["x", "y^2"])).unwrap();
        assert_eq!(mixed.route, SpreadRoute::ReesModMaximal);
        assert!(!mixed.equal_degree);
        assert_eq!(mixed.value, 2);
    }

    #[test]
    fn rees_route_agrees_on_equal_degree() {
        let r = RingContext::rational(&["x", "y", "z"]);
        for gens in [vec!["x^2", "x*y", "y^2"], vec!["x*y", "x*z", "y*z"], vec!["x^2 - y*z"]] {
            let i = id(&r, &gens);
            let kernel = analytic_spread(&i).unwrap().value;
            // perturb into the mixed route by adjoining a redundant higher-degree element
            let mut more = gens.clone();
            let extra = format!("({})*x", gens[0]);
            more.push(&extra);
            let rees = analytic_spread(&id(&r, &more)).unwrap();
            assert_eq!(rees.route, SpreadRoute::ReesModMaximal);
            assert_eq!(rees.value, kernel, "{gens:?}");
        }
    }

    #[test]
    fn certificates() {
        let inst = edge_complete(3).unwrap();
        let f: Vec<Polynomial> = inst.sop_f.iter().map(|(f, _)| f.clone()).collect();
        assert!(stci_certificate(&inst.ideal, &f).unwrap().holds);
        let jac = jacobian_arrangement().unwrap();
        let f: Vec<Polynomial> = jac.sop_f.iter().map(|(f, _)| f.clone()).collect();
        assert!(stci_certificate(&jac.ideal, &f).unwrap().holds);
        let r = RingContext::rational(&["x", "y"]);
        let rep = stci_certificate(&id(&r, &["x", "y"]), &[p(&r, "x")]).unwrap();
        assert!(!rep.holds);
        assert!(!rep.count_matches_height);
        assert!(!rep.a_in_radical_of_f);
    }
}
