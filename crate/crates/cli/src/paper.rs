//! `verify-paper`: staged replication of the published numbers for one family.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use symrees::criterion::{analytic_spread, check_criterion, stci_certificate, CriterionInput, CriterionReport};
use symrees::error::Error;
use symrees::families::{
    edge_complete_with, elementary_symmetric_in, fermat_resolution_numerator, fermat_with, jacobian_arrangement_with,
    CheckStatus, FamilyInstance,
};
use symrees::hilbert::{artinian_length, format_int_poly, hilbert_series, local_length_at_origin};
use symrees::idealops::Ideal;
use symrees::polyring::{Limits, Polynomial};
use symrees::sopfinder::{find_linear_sop, SopSearchConfig};
use symrees::symbolic::{symbolic_membership, symbolic_vs_ordinary, SymbolicComparison, SymbolicPowerRequest};

use crate::exec::{strings, to_value, Outcome, RunOptions};
use crate::jobfile::FamilyChoice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StageStatus {
    Passed,
    Failed,
    Skipped,
    Unverified,
    ResourceLimit,
    Error,
}

impl StageStatus {
    fn outcome(self) -> Outcome {
        match self {
            StageStatus::Passed | StageStatus::Skipped | StageStatus::Unverified => Outcome::Ok,
            StageStatus::Failed => Outcome::Negative,
            StageStatus::ResourceLimit => Outcome::Resource,
            StageStatus::Error => Outcome::Error,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stage {
    pub name: String,
    pub status: StageStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

struct Stages {
    list: Vec<Stage>,
    skip_slow: bool,
}

impl Stages {
    fn push(
        &mut self,
        name: &str,
        status: StageStatus,
        expected: Option<Value>,
        observed: Option<Value>,
        detail: Option<String>,
    ) {
        self.list.push(Stage {
            name: name.to_string(),
            status,
            expected,
            observed,
            detail,
        });
    }

    /// Runs `f` and compares its value with `expected`.
    fn compare(&mut self, name: &str, expected: Value, f: impl FnOnce() -> Result<Value, Error>) {
        self.compare_detailed(name, expected, || Ok((f()?, String::new())));
    }

    fn compare_detailed(&mut self, name: &str, expected: Value, f: impl FnOnce() -> Result<(Value, String), Error>) {
        match f() {
            Ok((observed, detail)) => {
                let status = if observed == expected {
                    StageStatus::Passed
                } else {
                    StageStatus::Failed
                };
                let detail = if detail.is_empty() { None } else { Some(detail) };
                self.push(name, status, Some(expected), Some(observed), detail);
            }
            Err(e) => self.error(name, Some(expected), e),
        }
    }

    fn slow(&mut self, name: &str, expected: Value, f: impl FnOnce() -> Result<Value, Error>) {
        self.slow_detailed(name, expected, || Ok((f()?, String::new())));
    }

    fn slow_detailed(&mut self, name: &str, expected: Value, f: impl FnOnce() -> Result<(Value, String), Error>) {
        if self.skip_slow {
            self.push(
                name,
                StageStatus::Skipped,
                Some(expected),
                None,
                Some("skipped by --skip-slow".into()),
            );
        } else {
            self.compare_detailed(name, expected, f);
        }
    }

    fn error(&mut self, name: &str, expected: Option<Value>, e: Error) {
        let status = match &e {
            Error::Resource(_) => StageStatus::ResourceLimit,
            Error::NotASop(_) | Error::Containment(_) => StageStatus::Failed,
            _ => StageStatus::Error,
        };
        self.push(name, status, expected, None, Some(e.to_string()));
    }

    fn construction(&mut self, name: &str, inst: &FamilyInstance, check: &str) {
        match inst.check(check) {
            Some(CheckStatus::Passed) => self.push(name, StageStatus::Passed, None, None, None),
            Some(CheckStatus::Failed { detail }) => {
                self.push(name, StageStatus::Failed, None, None, Some(detail.clone()))
            }
            Some(CheckStatus::Unverified { reason }) => {
                self.push(name, StageStatus::Unverified, None, None, Some(reason.clone()))
            }
            None => self.push(
                name,
                StageStatus::Error,
                None,
                None,
                Some(format!("no construction check `{check}`")),
            ),
        }
    }
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

fn criterion_sides(rep: &CriterionReport) -> Value {
    json!({ "lhs": rep.lhs, "rhs": rep.rhs, "verdict": to_value(&rep.verdict) })
}

fn equal_sides(v: u64) -> Value {
    json!({ "lhs": v, "rhs": v, "verdict": { "result": "equal" } })
}

fn edge_stages(st: &mut Stages, n: u32, opts: &RunOptions, limits: Limits) -> Result<(), Error> {
    let inst = edge_complete_with(n, limits)?;
    let ring = inst.ring.clone();
    st.compare("symmetric-length", json!(factorial(n)), || {
        let sigmas = (1..=n as usize)
            .map(|j| elementary_symmetric_in(&ring, j))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(json!(artinian_length(&Ideal::new(&ring, sigmas)?)?))
    });
    st.compare("criterion", equal_sides(factorial(n)), || {
        Ok(criterion_sides(&check_criterion(&CriterionInput::from_instance(
            &inst,
        ))?))
    });
    st.compare("second-symbolic-power-strict", json!("strict"), || {
        Ok(match symbolic_vs_ordinary(&inst.symbolic_request(2))? {
            SymbolicComparison::Equal => json!("equal"),
            SymbolicComparison::StrictContainment { .. } => json!("strict"),
        })
    });
    let fs: Vec<Polynomial> = inst.sop_f.iter().map(|(f, _)| f.clone()).collect();
    st.compare("set-theoretic-ci", json!(true), || {
        Ok(json!(stci_certificate(&inst.ideal, &fs)?.holds))
    });
    sop_search_stage(st, &inst, opts);
    Ok(())
}

fn sop_search_stage(st: &mut Stages, inst: &FamilyInstance, opts: &RunOptions) {
    let count = inst.sop_x.len();
    match find_linear_sop(
        &inst.ideal,
        &inst.minimal_primes,
        count,
        &SopSearchConfig::with_seed(opts.seed),
    ) {
        Ok(forms) => st.push(
            "sop-search",
            StageStatus::Passed,
            Some(json!({ "count": count })),
            Some(json!({ "count": forms.len(), "forms": strings(&forms) })),
            None,
        ),
        Err(e) => st.error("sop-search", Some(json!({ "count": count })), e),
    }
}

fn fermat_stages(st: &mut Stages, n: u32, opts: &RunOptions, limits: Limits) -> Result<(), Error> {
    let inst = fermat_with(n, true, limits)?;
    let expected_numerator = fermat_resolution_numerator(n)?;
    let hs = hilbert_series(&inst.ideal);
    st.compare("hilbert-numerator", json!(format_int_poly(&expected_numerator)), || {
        Ok(json!(format_int_poly(&hs.clone()?.numerator)))
    });
    st.compare("multiplicity", json!(n * n + 3), || Ok(json!(hs?.degree)));
    st.construction("radicality", &inst, "radical");
    st.construction(
        &format!("symbolic-membership-level-{n}"),
        &inst,
        &format!("symbolic-membership-level-{n}"),
    );
    st.slow("analytic-spread", json!(3), || {
        Ok(json!(analytic_spread(&inst.ideal)?.value))
    });
    let target = (n * n * (n * n + 3)) as u64;
    let literal = CriterionInput::from_instance(&inst);
    st.slow("local-multiplicity", json!(target), || {
        let mut gens = literal.sop_x.clone();
        gens.extend(literal.sop_f.iter().map(|(f, _)| f.clone()));
        Ok(json!(local_length_at_origin(&Ideal::new(&inst.ring, gens)?)?.length))
    });
    st.slow("criterion", equal_sides(target), || {
        Ok(criterion_sides(&check_criterion(&literal)?))
    });
    st.slow_detailed("criterion-searched-form", equal_sides(target), || {
        let cfg = SopSearchConfig::with_seed(opts.seed);
        let mut input = literal.clone();
        input.sop_x = find_linear_sop(&inst.ideal, &inst.minimal_primes, 1, &cfg)?;
        let rep = check_criterion(&input)?;
        Ok((criterion_sides(&rep), format!("x_1 = {}", input.sop_x[0])))
    });
    Ok(())
}

fn jacobian_stages(st: &mut Stages, opts: &RunOptions, limits: Limits) -> Result<(), Error> {
    let inst = jacobian_arrangement_with(limits)?;
    st.construction("partials-generate", &inst, "partials-generate");
    st.construction("decomposition", &inst, "radical");
    let f = inst.sop_f[1].0.clone();
    let z = Polynomial::var_named(&inst.ring, "z")?;
    st.compare("zf-in-square", json!(true), || {
        Ok(json!(inst.ideal.power(2).contains(&(&z * &f))?))
    });
    st.compare("f-in-second-symbolic-power", json!(true), || {
        Ok(json!(symbolic_membership(
            &f,
            &SymbolicPowerRequest::new(&inst.ideal, 2, inst.symbolic_method())
        )?))
    });
    st.compare("length", json!(6), || {
        let mut gens = inst.sop_x.clone();
        gens.extend(inst.sop_f.iter().map(|(f, _)| f.clone()));
        Ok(json!(artinian_length(&Ideal::new(&inst.ring, gens)?)?))
    });
    st.compare("criterion", equal_sides(6), || {
        Ok(criterion_sides(&check_criterion(&CriterionInput::from_instance(
            &inst,
        ))?))
    });
    let fs: Vec<Polynomial> = inst.sop_f.iter().map(|(f, _)| f.clone()).collect();
    st.compare("set-theoretic-ci", json!(true), || {
        Ok(json!(stci_certificate(&inst.ideal, &fs)?.holds))
    });
    sop_search_stage(st, &inst, opts);
    Ok(())
}

/// Runs the stages for `family` and reports them with an overall outcome.
pub fn verify_paper(
    family: FamilyChoice,
    n: Option<u32>,
    opts: &RunOptions,
    limits: Limits,
) -> Result<(Value, Outcome), Error> {
    let mut st = Stages {
        list: Vec::new(),
        skip_slow: opts.skip_slow,
    };
    let n_used = match family {
        FamilyChoice::Jacobian => {
            if n.is_some() {
                return Err(Error::InvalidArgument("the jacobian family takes no `--n`".into()));
            }
            jacobian_stages(&mut st, opts, limits)?;
            None
        }
        FamilyChoice::Edge => {
            let n = n.or(family.default_n()).unwrap();
            edge_stages(&mut st, n, opts, limits)?;
            Some(n)
        }
        FamilyChoice::Fermat => {
            let n = n.or(family.default_n()).unwrap();
            fermat_stages(&mut st, n, opts, limits)?;
            Some(n)
        }
    };
    let outcome = st.list.iter().map(|s| s.status.outcome()).max().unwrap_or(Outcome::Ok);
    let all_passed = st.list.iter().all(|s| s.status == StageStatus::Passed);
    let family_name = match family {
        FamilyChoice::Edge => "edge-complete",
        FamilyChoice::Fermat => "fermat",
        FamilyChoice::Jacobian => "jacobian-arrangement",
    };
    Ok((
        json!({
            "family": family_name,
            "n": n_used,
            "skip_slow": opts.skip_slow,
            "stages": to_value(&st.list),
            "all_passed": all_passed,
        }),
        outcome,
    ))
}
