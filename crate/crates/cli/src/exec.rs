//! Runs a parsed job and assembles the JSON report.

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use symrees::criterion::{analytic_spread, check_criterion, check_reduction, stci_certificate, CriterionInput};
use symrees::error::Error;
use symrees::families::{edge_complete_with, fermat_with, jacobian_arrangement_with};
use symrees::hilbert::{artinian_length, format_int_poly, hilbert_series, local_length_at_origin};
use symrees::idealops::{dimension, height, intersect, radical_membership, saturate, saturate_ideal, Ideal};
use symrees::polyring::{Limits, Polynomial, Ring, DEFAULT_GB_DEGREE_CAP, DEFAULT_LOCAL_N_CAP};
use symrees::sopfinder::{find_linear_sop, SopSearchConfig};
use symrees::symbolic::{
    symbolic_power, symbolic_vs_ordinary, SymbolicComparison, SymbolicMethod, SymbolicPowerRequest,
};

use crate::jobfile::{
    Command, FamilyChoice, JobOptions, JobSpec, MethodChoice, NamedIdeal, NamedPoly, OutputFormat, SaturateBy,
};
use crate::paper::verify_paper;

pub const SCHEMA_VERSION: u32 = 1;

/// Effective options after defaults and overrides.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOptions {
    pub format: OutputFormat,
    pub seed: u64,
    pub gb_degree_cap: u32,
    pub local_n_cap: u32,
    pub time_budget_sec: Option<f64>,
    pub skip_slow: bool,
}

impl RunOptions {
    pub fn resolve(opts: &JobOptions) -> Self {
        RunOptions {
            format: opts.format.unwrap_or(OutputFormat::Text),
            seed: opts.seed.unwrap_or(0),
            gb_degree_cap: opts.gb_degree_cap.unwrap_or(DEFAULT_GB_DEGREE_CAP),
            local_n_cap: opts.local_n_cap.unwrap_or(DEFAULT_LOCAL_N_CAP),
            time_budget_sec: opts.time_budget_sec,
            skip_slow: opts.skip_slow.unwrap_or(false),
        }
    }

    pub fn limits(&self, start: Instant) -> Limits {
        Limits {
            gb_degree_cap: self.gb_degree_cap,
            local_n_cap: self.local_n_cap,
            deadline: self.time_budget_sec.map(|s| start + Duration::from_secs_f64(s)),
        }
    }
}

/// Classification of one command's result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Ok,
    /// A check-style command answered "false" or "unequal".
    Negative,
    Resource,
    Error,
}

impl Outcome {
    pub fn label(self) -> &'static str {
        match self {
            Outcome::Ok => "ok",
            Outcome::Negative => "negative",
            Outcome::Resource => "resource-limit",
            Outcome::Error => "error",
        }
    }

    pub fn of_error(e: &Error) -> Outcome {
        if e.is_resource() {
            Outcome::Resource
        } else {
            Outcome::Error
        }
    }
}

/// Exit status for a set of outcomes: 1 on any error, else 3 on any
/// resource limit, else 2 on any negative answer, else 0.
pub fn exit_code(outcomes: &[Outcome]) -> i32 {
    if outcomes.contains(&Outcome::Error) {
        1
    } else if outcomes.contains(&Outcome::Resource) {
        3
    } else if outcomes.contains(&Outcome::Negative) {
        2
    } else {
        0
    }
}

pub(crate) fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

pub(crate) fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn rebase_ideal(i: &Ideal, ring: &Ring) -> Result<Ideal, Error> {
    Ideal::new(ring, i.generators().to_vec())
}

fn rebase_named(n: &NamedIdeal, ring: &Ring) -> Result<NamedIdeal, Error> {
    Ok(NamedIdeal {
        label: n.label.clone(),
        ideal: rebase_ideal(&n.ideal, ring)?,
        primes: n
            .primes
            .as_ref()
            .map(|ps| ps.iter().map(|p| rebase_ideal(p, ring)).collect())
            .transpose()?,
    })
}

fn rebase_poly(p: &NamedPoly, ring: &Ring) -> Result<NamedPoly, Error> {
    Ok(NamedPoly {
        label: p.label.clone(),
        poly: p.poly.reorder(ring)?,
    })
}

fn bool_result(key: &str, holds: bool, mut body: Value) -> (Value, Outcome) {
    body[key] = json!(holds);
    (body, if holds { Outcome::Ok } else { Outcome::Negative })
}

fn sympow_method(ideal: &NamedIdeal, m: &MethodChoice) -> SymbolicMethod {
    match m {
        MethodChoice::Auto => match &ideal.primes {
            Some(ps) => SymbolicMethod::ComponentIntersection(ps.clone()),
            None => SymbolicMethod::SaturateAtMax,
        },
        MethodChoice::SaturateAtMax => SymbolicMethod::SaturateAtMax,
        MethodChoice::Components => SymbolicMethod::ComponentIntersection(ideal.primes.clone().unwrap_or_default()),
        MethodChoice::AtElement(g) => SymbolicMethod::SaturateAtElement(g.poly.clone()),
    }
}

/// Runs one command with every ring object rebased onto a ring carrying `limits`.
pub fn run_command(cmd: &Command, opts: &RunOptions, limits: Limits) -> Result<(Value, Outcome), Error> {
    let with_ring = |i: &NamedIdeal| -> Result<NamedIdeal, Error> {
        let ring = i.ideal.ring().with_new_limits(limits);
        rebase_named(i, &ring)
    };
    match cmd {
        Command::Gb(i) => {
            let i = with_ring(i)?;
            let gb = i.ideal.gb()?;
            Ok((
                json!({ "ideal": i.label, "order": i.ideal.ring().order().name(), "basis": strings(gb.elements()) }),
                Outcome::Ok,
            ))
        }
        Command::Hilbert(i) => {
            let i = with_ring(i)?;
            let hs = hilbert_series(&i.ideal)?;
            Ok((
                json!({
                    "ideal": i.label,
                    "numerator": hs.numerator,
                    "numerator_text": format_int_poly(&hs.numerator),
                    "reduced_numerator": hs.reduced_numerator,
                    "dimension": hs.dimension,
                    "multiplicity": hs.degree,
                    "series": hs.to_string(),
                }),
                Outcome::Ok,
            ))
        }
        Command::Length(i) => {
            let i = with_ring(i)?;
            Ok((
                json!({ "ideal": i.label, "length": artinian_length(&i.ideal)? }),
                Outcome::Ok,
            ))
        }
        Command::LocalLength(i) => {
            let i = with_ring(i)?;
            let l = local_length_at_origin(&i.ideal)?;
            Ok((
                json!({ "ideal": i.label, "length": l.length, "stabilized_at": l.stabilized_at }),
                Outcome::Ok,
            ))
        }
        Command::Sympow {
            ideal,
            exponent,
            method,
            compare,
        } => {
            let ideal = with_ring(ideal)?;
            let method = match method {
                MethodChoice::AtElement(g) => MethodChoice::AtElement(rebase_poly(g, ideal.ideal.ring())?),
                other => other.clone(),
            };
            let req = SymbolicPowerRequest::new(&ideal.ideal, *exponent, sympow_method(&ideal, &method));
            let sp = symbolic_power(&req)?;
            let mut out = json!({
                "ideal": ideal.label,
                "exponent": exponent,
                "method": sp.method,
                "generators": strings(sp.ideal.generators()),
            });
            if let Some(e) = sp.saturation_exponent {
                out["saturation_exponent"] = json!(e);
            }
            if *compare {
                out["comparison"] = match symbolic_vs_ordinary(&req)? {
                    SymbolicComparison::Equal => json!({ "result": "equal" }),
                    SymbolicComparison::StrictContainment { witness } => {
                        json!({ "result": "strict", "witness": witness.to_string() })
                    }
                };
            }
            Ok((out, Outcome::Ok))
        }
        Command::Member { poly, ideal } => {
            let ideal = with_ring(ideal)?;
            let poly = rebase_poly(poly, ideal.ideal.ring())?;
            let holds = ideal.ideal.contains(&poly.poly)?;
            Ok(bool_result(
                "holds",
                holds,
                json!({ "element": poly.label, "ideal": ideal.label }),
            ))
        }
        Command::Radmember { poly, ideal } => {
            let ideal = with_ring(ideal)?;
            let poly = rebase_poly(poly, ideal.ideal.ring())?;
            let holds = radical_membership(&poly.poly, &ideal.ideal)?;
            Ok(bool_result(
                "holds",
                holds,
                json!({ "element": poly.label, "ideal": ideal.label }),
            ))
        }
        Command::Intersect(a, b) => {
            let a = with_ring(a)?;
            let b = rebase_named(b, a.ideal.ring())?;
            let meet = intersect(&a.ideal, &b.ideal)?.with_gb_generators()?;
            Ok((
                json!({ "left": a.label, "right": b.label, "generators": strings(meet.generators()) }),
                Outcome::Ok,
            ))
        }
        Command::Saturate { ideal, by } => {
            let ideal = with_ring(ideal)?;
            let ring = ideal.ideal.ring().clone();
            let (sat, e, label) = match by {
                SaturateBy::Poly(g) => {
                    let g = rebase_poly(g, &ring)?;
                    let (s, e) = saturate(&ideal.ideal, &g.poly)?;
                    (s, e, g.label)
                }
                SaturateBy::Ideal(j) => {
                    let j = rebase_named(j, &ring)?;
                    let (s, e) = saturate_ideal(&ideal.ideal, &j.ideal)?;
                    (s, e, j.label)
                }
            };
            let sat = sat.with_gb_generators()?;
            Ok((
                json!({ "ideal": ideal.label, "by": label, "generators": strings(sat.generators()), "exponent": e }),
                Outcome::Ok,
            ))
        }
        Command::Dim(i) => {
            let i = with_ring(i)?;
            let d = dimension(&i.ideal)?;
            Ok((
                json!({ "ideal": i.label, "dimension": d, "height": height(&i.ideal)? }),
                Outcome::Ok,
            ))
        }
        Command::Spread(i) => {
            let i = with_ring(i)?;
            let mut out = to_value(&analytic_spread(&i.ideal)?);
            out["ideal"] = json!(i.label);
            Ok((out, Outcome::Ok))
        }
        Command::Reduction { j, i, r_max } => {
            let i = with_ring(i)?;
            let j = rebase_named(j, i.ideal.ring())?;
            let res = check_reduction(&j.ideal, &i.ideal, *r_max)?;
            let mut out = to_value(&res);
            out["reduction"] = json!(j.label);
            out["ideal"] = json!(i.label);
            let outcome = if res.is_reduction() {
                Outcome::Ok
            } else {
                Outcome::Negative
            };
            Ok((out, outcome))
        }
        Command::Criterion {
            ideal,
            x,
            f,
            multiplicities,
        } => {
            let ideal = with_ring(ideal)?;
            let ring = ideal.ideal.ring().clone();
            let primes = ideal.primes.clone().unwrap_or_default();
            let input = CriterionInput {
                localization_multiplicities: multiplicities.clone().unwrap_or_else(|| vec![1; primes.len()]),
                primes,
                sop_x: x
                    .iter()
                    .map(|p| Ok(rebase_poly(p, &ring)?.poly))
                    .collect::<Result<_, Error>>()?,
                sop_f: f
                    .iter()
                    .map(|(p, k)| Ok((rebase_poly(p, &ring)?.poly, *k)))
                    .collect::<Result<_, Error>>()?,
                ideal: ideal.ideal,
            };
            let rep = check_criterion(&input)?;
            let outcome = if rep.verdict.is_equal() {
                Outcome::Ok
            } else {
                Outcome::Negative
            };
            Ok((to_value(&rep), outcome))
        }
        Command::Stci { ideal, f } => {
            let ideal = with_ring(ideal)?;
            let fs = f
                .iter()
                .map(|p| Ok(rebase_poly(p, ideal.ideal.ring())?.poly))
                .collect::<Result<Vec<_>, Error>>()?;
            let rep = stci_certificate(&ideal.ideal, &fs)?;
            let outcome = if rep.holds { Outcome::Ok } else { Outcome::Negative };
            Ok((to_value(&rep), outcome))
        }
        Command::Sop { ideal, count } => {
            let ideal = with_ring(ideal)?;
            let count = match count {
                Some(c) => *c,
                None => dimension(&ideal.ideal)?,
            };
            let cfg = SopSearchConfig::with_seed(opts.seed);
            let primes = ideal.primes.clone().unwrap_or_default();
            let forms = find_linear_sop(&ideal.ideal, &primes, count, &cfg)?;
            Ok((
                json!({ "ideal": ideal.label, "seed": opts.seed, "forms": strings(&forms) }),
                Outcome::Ok,
            ))
        }
        Command::Family { family, n, cyclotomic } => {
            let inst = match family {
                FamilyChoice::Edge => edge_complete_with(n.or(family.default_n()).unwrap(), limits)?,
                FamilyChoice::Fermat => fermat_with(n.or(family.default_n()).unwrap(), *cyclotomic, limits)?,
                FamilyChoice::Jacobian => {
                    if n.is_some() {
                        return Err(Error::InvalidArgument("the jacobian family takes no `--n`".into()));
                    }
                    jacobian_arrangement_with(limits)?
                }
            };
            Ok((to_value(&inst.summary()), Outcome::Ok))
        }
        Command::VerifyPaper { family, n } => verify_paper(*family, *n, opts, limits),
    }
}

/// Runs every command of `job` and returns the report with its exit code.
pub fn run_job(job: &JobSpec, opts: &RunOptions) -> (Value, i32) {
    let start = Instant::now();
    let limits = opts.limits(start);
    let mut results = Vec::new();
    let mut outcomes = Vec::new();
    for lc in &job.commands {
        let mut entry = json!({ "command": lc.command.name(), "line": lc.line });
        let outcome = match run_command(&lc.command, opts, limits) {
            Ok((value, outcome)) => {
                entry["result"] = value;
                outcome
            }
            Err(e) => {
                let outcome = Outcome::of_error(&e);
                entry["error"] = json!({ "class": outcome.label(), "message": e.to_string() });
                outcome
            }
        };
        entry["status"] = json!(outcome.label());
        outcomes.push(outcome);
        results.push(entry);
    }
    let code = exit_code(&outcomes);
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "ring": job.ring.as_ref().map(|r| r.header()),
        "seed": opts.seed,
        "results": results,
        "exit_code": code,
    });
    (report, code)
}

/// Report for a jobfile that failed to parse.
pub fn parse_error_report(d: &crate::jobfile::Diagnostic) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "error": { "class": "parse", "line": d.line, "column": d.column, "message": d.message },
        "exit_code": 1,
    })
}
