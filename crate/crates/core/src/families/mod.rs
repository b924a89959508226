//! The three built-in ideal families with their minimal primes, systems of
//! parameters and symbolic levels:
//!
//! * edge ideals of complete graphs `(x_i x_j : i < j)`;
//! * Fermat ideals `J_n = (x(y^n − z^n), y(z^n − x^n), z(x^n − y^n))`;
//! * the Jacobian ideal of the arrangement `f = w(x+y)(x+y+z+w)`.
//!
//! Constructors run their side checks eagerly and record the outcome of
//! each one on the instance.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::FieldConfig;
use crate::hilbert::{local_length_at_origin, IntPoly};
use crate::idealops::{dimension, height, ideal_equal, intersect, Ideal};
use crate::polyring::{parse_polynomial, Limits, MonomialOrder, Polynomial, Ring, RingContext};
use crate::symbolic::{symbolic_membership, SymbolicMethod, SymbolicPowerRequest, ValidityAssertions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyName {
    EdgeComplete,
    Fermat,
    JacobianArrangement,
}

impl FamilyName {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::EdgeComplete => "edge-complete",
            FamilyName::Fermat => "fermat",
            FamilyName::JacobianArrangement => "jacobian-arrangement",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum CheckStatus {
    Passed,
    Failed { detail: String },
    Unverified { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionCheck {
    pub name: String,
    #[serde(flatten)]
    pub status: CheckStatus,
}

/// Justification recorded for every supplied localization multiplicity.
pub const LOCALIZATION_JUSTIFICATION: &str = "radical ideal, regular localization";

#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub name: FamilyName,
    pub n: Option<u32>,
    pub ring: Ring,
    pub ideal: Ideal,
    pub minimal_primes: Vec<Ideal>,
    pub sop_x: Vec<Polynomial>,
    /// Elements `f_j` with levels `k_j` such that `f_j ∈ a^(k_j)`.
    pub sop_f: Vec<(Polynomial, u32)>,
    /// `e_{aR_P}(R_P)` for each minimal prime, in the order of `minimal_primes`.
    pub localization_multiplicities: Vec<i64>,
    pub assertions: ValidityAssertions,
    pub checks: Vec<ConstructionCheck>,
}

impl FamilyInstance {
    /// Route used for symbolic-power queries on this instance: component
    /// intersection when the primes are known, saturation at `𝔪` otherwise.
    pub fn symbolic_method(&self) -> SymbolicMethod {
        if self.minimal_primes.is_empty() {
            SymbolicMethod::SaturateAtMax
        } else {
            SymbolicMethod::ComponentIntersection(self.minimal_primes.clone())
        }
    }

    pub fn symbolic_request(&self, m: u32) -> SymbolicPowerRequest {
        SymbolicPowerRequest::new(&self.ideal, m, self.symbolic_method()).with_assertions(self.assertions)
    }

    pub fn check(&self, name: &str) -> Option<&CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.status)
    }

    pub fn summary(&self) -> FamilySummary {
        let strs = |v: &[Polynomial]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
        FamilySummary {
            name: self.name,
            n: self.n,
            ring: self.ring.header(),
            generators: strs(self.ideal.generators()),
            minimal_primes: self.minimal_primes.iter().map(|p| strs(p.generators())).collect(),
            sop_x: strs(&self.sop_x),
            sop_f: self
                .sop_f
                .iter()
                .map(|(f, k)| LeveledElement {
                    element: f.to_string(),
                    level: *k,
                })
                .collect(),
            localization_multiplicities: self.localization_multiplicities.clone(),
            localization_justification: LOCALIZATION_JUSTIFICATION.to_string(),
            assertions: self.assertions,
            checks: self.checks.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeveledElement {
    pub element: String,
    pub level: u32,
}

/// Text form of a [`FamilyInstance`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub name: FamilyName,
    pub n: Option<u32>,
    pub ring: String,
    pub generators: Vec<String>,
    pub minimal_primes: Vec<Vec<String>>,
    pub sop_x: Vec<String>,
    pub sop_f: Vec<LeveledElement>,
    pub localization_multiplicities: Vec<i64>,
    pub localization_justification: String,
    pub assertions: ValidityAssertions,
    pub checks: Vec<ConstructionCheck>,
}

struct Checks(Vec<ConstructionCheck>);

impl Checks {
    fn record(&mut self, name: &str, status: CheckStatus) {
        self.0.push(ConstructionCheck {
            name: name.to_string(),
            status,
        });
    }

    /// Records a boolean check that must pass for the instance to exist.
    fn require(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) -> Result<()> {
        if ok {
            self.record(name, CheckStatus::Passed);
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "construction check `{name}` failed: {}",
                detail()
            )))
        }
    }
}

/// `σ_j` in the variables of `ring`.
pub fn elementary_symmetric_in(ring: &Ring, j: usize) -> Result<Polynomial> {
    let n = ring.nvars();
    if j == 0 || j > n {
        return Err(Error::InvalidArgument(format!("σ_{j} needs 1 ≤ j ≤ {n}")));
    }
    let mut acc = Polynomial::zero(ring);
    let mut pick: Vec<usize> = (0..j).collect();
    loop {
        let mut exps = vec![0u32; n];
        for &v in &pick {
            exps[v] = 1;
        }
        acc = &acc + &Polynomial::monomial(ring, crate::polyring::Monomial::from_exponents(&exps));
        // next j-subset in lexicographic order
        let Some(k) = (0..j).rev().find(|&k| pick[k] < n - j + k) else {
            break;
        };
        pick[k] += 1;
        for l in k + 1..j {
            pick[l] = pick[l - 1] + 1;
        }
    }
    Ok(acc)
}

/// `ℚ[x1, ..., xn]` under grevlex.
pub fn indexed_ring(n: usize) -> Ring {
    indexed_ring_with(n, Limits::default())
}

fn indexed_ring_with(n: usize, limits: Limits) -> Ring {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    RingContext::with_limits(FieldConfig::rationals(), names, MonomialOrder::Grevlex, limits)
        .expect("indexed variable names are distinct")
}

fn named_ring(field: Arc<FieldConfig>, vars: &[&str], limits: Limits) -> Result<Ring> {
    RingContext::with_limits(
        field,
        vars.iter().map(|v| v.to_string()).collect(),
        MonomialOrder::Grevlex,
        limits,
    )
}

/// `σ_j(x1, ..., xn)`.
pub fn elementary_symmetric(n: usize, j: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("σ_j needs at least one variable".into()));
    }
    elementary_symmetric_in(&indexed_ring(n), j)
}

/// Edge ideal of the complete graph on `n ≥ 3` vertices.
pub fn edge_complete(n: u32) -> Result<FamilyInstance> {
    edge_complete_with(n, Limits::default())
}

/// [`edge_complete`] in a ring carrying `limits`.
pub fn edge_complete_with(n: u32, limits: Limits) -> Result<FamilyInstance> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("edge_complete needs n ≥ 3, got {n}")));
    }
    let nv = n as usize;
    let ring = indexed_ring_with(nv, limits);
    let mut gens = Vec::new();
    for i in 0..nv {
        for j in i + 1..nv {
            gens.push(&Polynomial::var(&ring, i) * &Polynomial::var(&ring, j));
        }
    }
    let ideal = Ideal::new(&ring, gens)?;
    let primes: Vec<Ideal> = (0..nv)
        .map(|i| {
            Ideal::new(
                &ring,
                (0..nv).filter(|&k| k != i).map(|k| Polynomial::var(&ring, k)).collect(),
            )
        })
        .collect::<Result<_>>()?;
    let sop_x = vec![elementary_symmetric_in(&ring, 1)?];
    let sop_f = (2..=nv)
        .map(|j| Ok((elementary_symmetric_in(&ring, j)?, j as u32 - 1)))
        .collect::<Result<Vec<_>>>()?;

    let mut checks = Checks(Vec::new());
    checks.record("radical", CheckStatus::Passed);
    let dim = dimension(&ideal)?;
    let ht = height(&ideal)?;
    checks.require("height-plus-dimension", ht + dim == nv && dim == 1, || {
        format!("ht {ht}, dim {dim}")
    })?;
    for p in &primes {
        let h = height(p)?;
        checks.require("prime-heights", h == nv - 1, || format!("{p} has height {h}"))?;
    }
    checks.0.dedup();
    let inst = FamilyInstance {
        name: FamilyName::EdgeComplete,
        n: Some(n),
        ring,
        ideal,
        localization_multiplicities: vec![1; primes.len()],
        minimal_primes: primes,
        sop_x,
        sop_f,
        assertions: ValidityAssertions {
            unmixed: true,
            dim_one: true,
            radical_with_components: true,
        },
        checks: Vec::new(),
    };
    check_memberships(&inst, &mut checks)?;
    Ok(FamilyInstance {
        checks: checks.0,
        ..inst
    })
}

fn check_memberships(inst: &FamilyInstance, checks: &mut Checks) -> Result<()> {
    for (f, k) in &inst.sop_f {
        let ok = symbolic_membership(f, &inst.symbolic_request(*k))?;
        checks.require(&format!("symbolic-membership-level-{k}"), ok, || {
            format!("{f} ∉ a^({k})")
        })?;
    }
    Ok(())
}

/// Closed-form Hilbert numerator `1 − 3u^(n+1) + u^(n+3) + u^(2n)` of `S/J_n`.
pub fn fermat_resolution_numerator(n: u32) -> Result<IntPoly> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("fermat needs n ≥ 3, got {n}")));
    }
    let n = n as usize;
    let mut h = vec![0i64; 2 * n + 1];
    h[0] += 1;
    h[n + 1] -= 3;
    h[n + 3] += 1;
    h[2 * n] += 1;
    Ok(h)
}

/// The elements `r, s, t` and the pair `f_1, f_2` of the Fermat construction.
pub struct FermatElements {
    pub r: Polynomial,
    pub s: Polynomial,
    pub t: Polynomial,
    pub f1: Polynomial,
    pub f2: Polynomial,
}

/// `r = y^n − z^n`, `s = z^n − x^n`, `t = x^n − y^n`,
/// `f_1 = r s^(n−2) t − 2 r^(n−2) s t` and
/// `f_2 = r s^(n−2) t + 2(s^(n−2) r^2 x^n + t^(n−2) s^2 y^n + r^(n−2) t^2 z^n)`.
pub fn fermat_elements(ring: &Ring, n: u32) -> Result<FermatElements> {
    if ring.nvars() != 3 {
        return Err(Error::LengthMismatch {
            expected: 3,
            found: ring.nvars(),
        });
    }
    let x = Polynomial::var(ring, 0).pow(n);
    let y = Polynomial::var(ring, 1).pow(n);
    let z = Polynomial::var(ring, 2).pow(n);
    let r = &y - &z;
    let s = &z - &x;
    let t = &x - &y;
    let two = Polynomial::from_int(ring, 2);
    let lead = &(&r * &s.pow(n - 2)) * &t;
    let f1 = &lead - &(&two * &(&r.pow(n - 2) * &(&s * &t)));
    let tail = &(&(&s.pow(n - 2) * &r.pow(2)) * &x)
        + &(&(&(&t.pow(n - 2) * &s.pow(2)) * &y) + &(&(&r.pow(n - 2) * &t.pow(2)) * &z));
    let f2 = &lead + &(&two * &tail);
    Ok(FermatElements { r, s, t, f1, f2 })
}

/// The Fermat ideal `J_n` over `ℚ`, or over `ℚ(η)` with `η` a primitive
/// `n`-th root of unity together with its `n² + 3` linear minimal primes.
pub fn fermat(n: u32, with_cyclotomic: bool) -> Result<FamilyInstance> {
    fermat_with(n, with_cyclotomic, Limits::default())
}

/// [`fermat`] in a ring carrying `limits`.
pub fn fermat_with(n: u32, with_cyclotomic: bool, limits: Limits) -> Result<FamilyInstance> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("fermat needs n ≥ 3, got {n}")));
    }
    let field = if with_cyclotomic {
        FieldConfig::cyclotomic(n)
    } else {
        FieldConfig::rationals()
    };
    let ring = named_ring(field, &["x", "y", "z"], limits)?;
    let el = fermat_elements(&ring, n)?;
    let (x, y, z) = (
        Polynomial::var(&ring, 0),
        Polynomial::var(&ring, 1),
        Polynomial::var(&ring, 2),
    );
    let ideal = Ideal::new(&ring, vec![&x * &el.r, &y * &el.s, &z * &el.t])?;
    let mut primes = Vec::new();
    if with_cyclotomic {
        for i in 0..n {
            for j in 0..n {
                primes.push(Ideal::new(
                    &ring,
                    vec![
                        parse_polynomial(&ring, &format!("y - t^{i}*z"))?,
                        parse_polynomial(&ring, &format!("z - t^{j}*x"))?,
                    ],
                )?);
            }
        }
        for pair in [["y", "z"], ["x", "z"], ["x", "y"]] {
            primes.push(Ideal::parse(&ring, &pair)?);
        }
    }
    let sop_x = vec![&(&x + &y) + &z];
    let sop_f = vec![(el.f1.clone(), n), (el.f2.clone(), n)];

    let mut checks = Checks(Vec::new());
    let dim = dimension(&ideal)?;
    checks.require("height-plus-dimension", dim == 1, || format!("dim S/J_n = {dim}"))?;
    if with_cyclotomic && n <= 4 {
        let mut acc = primes[0].clone();
        for p in &primes[1..] {
            acc = intersect(&acc, p)?.with_gb_generators()?;
        }
        let eq = ideal_equal(&acc, &ideal)?;
        checks.require("radical", eq, || {
            "J_n differs from the intersection of its primes".into()
        })?;
    } else {
        checks.record(
            "radical",
            CheckStatus::Unverified {
                reason: "asserted; verified only over the cyclotomic field for n ≤ 4".into(),
            },
        );
    }
    let inst = FamilyInstance {
        name: FamilyName::Fermat,
        n: Some(n),
        ring,
        ideal,
        localization_multiplicities: vec![1; primes.len()],
        minimal_primes: primes,
        sop_x,
        sop_f,
        assertions: ValidityAssertions {
            unmixed: true,
            dim_one: true,
            radical_with_components: with_cyclotomic,
        },
        checks: Vec::new(),
    };
    if n <= 4 {
        // the paper's route: a^(n) = a^n : 𝔪^∞
        for (f, k) in &inst.sop_f {
            let req = SymbolicPowerRequest::new(&inst.ideal, *k, SymbolicMethod::SaturateAtMax)
                .with_assertions(inst.assertions);
            let ok = symbolic_membership(f, &req)?;
            checks.require(&format!("symbolic-membership-level-{k}"), ok, || {
                format!("{f} ∉ a^({k})")
            })?;
        }
    } else {
        for (_, k) in &inst.sop_f {
            checks.record(
                &format!("symbolic-membership-level-{k}"),
                CheckStatus::Unverified {
                    reason: "asserted, unverified for n > 4".into(),
                },
            );
        }
    }
    checks.record("system-of-parameters", fermat_sop_status(&inst));
    Ok(FamilyInstance {
        checks: checks.0,
        ..inst
    })
}

/// Whether the origin is an isolated zero of `(x_1, f_1, f_2)`.
fn fermat_sop_status(inst: &FamilyInstance) -> CheckStatus {
    let mut gens = inst.sop_x.clone();
    gens.extend(inst.sop_f.iter().map(|(f, _)| f.clone()));
    let q = match Ideal::new(&inst.ring, gens) {
        Ok(q) => q,
        Err(e) => return CheckStatus::Failed { detail: e.to_string() },
    };
    match local_length_at_origin(&q) {
        Ok(_) => CheckStatus::Passed,
        Err(e) if e.is_resource() => CheckStatus::Failed {
            detail: format!("origin not isolated in V(x_1, f_1, f_2): {e}"),
        },
        Err(e) => CheckStatus::Failed { detail: e.to_string() },
    }
}

/// Jacobian ideal of `f = w(x+y)(x+y+z+w)` in `ℚ[x,y,z,w]`.
pub fn jacobian_arrangement() -> Result<FamilyInstance> {
    jacobian_arrangement_with(Limits::default())
}

/// [`jacobian_arrangement`] in a ring carrying `limits`.
pub fn jacobian_arrangement_with(limits: Limits) -> Result<FamilyInstance> {
    let ring = named_ring(FieldConfig::rationals(), &["x", "y", "z", "w"], limits)?;
    let p = |s: &str| parse_polynomial(&ring, s);
    let f = p("w*(x+y)*(x+y+z+w)")?;
    let (fx, fy, fz, fw) = (
        f.partial_derivative(0)?,
        f.partial_derivative(1)?,
        f.partial_derivative(2)?,
        f.partial_derivative(3)?,
    );
    let g1 = p("w*(z+w)")?;
    let g2 = p("w*(x+y)")?;
    let g3 = p("(x+y)*(x+y+z)")?;
    let ideal = Ideal::new(&ring, vec![g1.clone(), g3.clone(), g2.clone()])?;
    let raw = Ideal::new(&ring, vec![fx.clone(), fz, fw])?;
    let primes = vec![
        Ideal::new(&ring, vec![p("z+w")?, p("x+y")?])?,
        Ideal::new(&ring, vec![p("w")?, p("x+y")?])?,
        Ideal::new(&ring, vec![p("w")?, p("x+y+z")?])?,
    ];
    let mut checks = Checks(Vec::new());
    checks.require("partials-symmetric", fx == fy, || "f_x ≠ f_y".into())?;
    checks.require("partials-generate", ideal_equal(&raw, &ideal)?, || {
        "raw partials differ".into()
    })?;
    let meet = intersect(&intersect(&primes[0], &primes[1])?, &primes[2])?;
    checks.require("radical", ideal_equal(&meet, &ideal)?, || {
        "a differs from the intersection".into()
    })?;
    let dim = dimension(&ideal)?;
    let ht = height(&ideal)?;
    checks.require("height-plus-dimension", ht + dim == 4 && dim == 2, || {
        format!("ht {ht}, dim {dim}")
    })?;
    let inst = FamilyInstance {
        name: FamilyName::JacobianArrangement,
        n: None,
        ring: ring.clone(),
        ideal,
        localization_multiplicities: vec![1; primes.len()],
        minimal_primes: primes,
        sop_x: vec![p("x")?, p("z")?],
        sop_f: vec![(&g1 + &g3, 1), (f, 2)],
        assertions: ValidityAssertions {
            unmixed: true,
            dim_one: false,
            radical_with_components: true,
        },
        checks: Vec::new(),
    };
    check_memberships(&inst, &mut checks)?;
    Ok(FamilyInstance {
        checks: checks.0,
        ..inst
    })
}
