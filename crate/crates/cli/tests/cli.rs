use std::io::Write;
use std::process::Command as Process;

use serde_json::Value;

use symrees_cli::jobfile::{Command, MethodChoice};
use symrees_cli::{parse_jobfile, render_text, run_job, JobOptions, OutputFormat, RunOptions};

fn bin() -> Process {
    Process::new(env!("CARGO_BIN_EXE_symrees"))
}

fn run_bin(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8"),
    )
}

fn run_jobfile(text: &str, extra: &[&str]) -> (i32, String) {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    let path = f.path().to_str().unwrap().to_string();
    let mut args = vec!["run", path.as_str()];
    args.extend_from_slice(extra);
    run_bin(&args)
}

fn json_opts() -> RunOptions {
    RunOptions::resolve(&JobOptions {
        format: Some(OutputFormat::Json),
        ..Default::default()
    })
}

fn stage<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["results"][0]["result"]["stages"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["name"] == name)
        .unwrap_or_else(|| panic!("no stage {name}"))
}

#[test]
fn parses_sympow_job() {
    let job = parse_jobfile("ring Q[x,y,z] grevlex; ideal a = (x*y, x*z, y*z); sympow a 2 --components auto;").unwrap();
    assert_eq!(job.ideals.len(), 1);
    assert_eq!(job.commands.len(), 1);
    match &job.commands[0].command {
        Command::Sympow { exponent, method, .. } => {
            assert_eq!(*exponent, 2);
            assert!(matches!(method, MethodChoice::Auto));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn accepts_number_field_ring() {
    let job = parse_jobfile("ring Q(t|t^2+t+1)[x,y,z] grevlex;\nideal j = (y - t*z, z - t^2*x);").unwrap();
    let ring = job.ring.unwrap();
    assert_eq!(ring.field().degree(), 2);
    assert_eq!(job.ideals[0].1.generators().len(), 2);
}

#[test]
fn diagnostics_carry_positions() {
    let d = parse_jobfile("ring Q[x,y] lex;\nideal a = (x*").unwrap_err();
    assert_eq!((d.line, d.column), (2, 11));
    let d = parse_jobfile("ring Q[x,y];\nideal a = (x, w);").unwrap_err();
    assert_eq!(d.line, 2);
    assert!(d.column >= 15, "{d}");
    let d = parse_jobfile("ring Q[x,y];\nideal a = (x);\ngb a a;").unwrap_err();
    assert!(d.message.contains("positional"), "{d}");
    let d = parse_jobfile("ring Q[x,y];\nfrobnicate;").unwrap_err();
    assert_eq!((d.line, d.column), (2, 1));
    let d = parse_jobfile("ring Q[x,y];\ngb b;").unwrap_err();
    assert!(d.message.contains("unknown ideal"));
    let d = parse_jobfile("ring Q[x,y];\nideal a = (x);\nsympow a 0;").unwrap_err();
    assert!(d.message.contains("positive"));
    let d = parse_jobfile("ideal a = (x);").unwrap_err();
    assert!(d.message.contains("ring"));
    let d = parse_jobfile("ring Q[x,y] lex").unwrap_err();
    assert!(d.message.contains("`;`"));
}

#[test]
fn set_statements_and_flag_precedence() {
    let job = parse_jobfile("set seed 9; set format json; set local-N-cap 64; set skip-slow;").unwrap();
    assert_eq!(job.options.seed, Some(9));
    let merged = job.options.merged(&JobOptions {
        seed: Some(2),
        ..Default::default()
    });
    let opts = RunOptions::resolve(&merged);
    assert_eq!(
        (opts.seed, opts.local_n_cap, opts.skip_slow, opts.format),
        (2, 64, true, OutputFormat::Json)
    );
}

#[test]
fn verify_edge_three() {
    let (code, out) = run_bin(&["verify-paper", "--family", "edge", "--n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    let c = stage(&v, "criterion");
    assert_eq!(c["observed"]["lhs"], 6);
    assert_eq!(c["observed"]["rhs"], 6);
    assert_eq!(c["observed"]["verdict"]["result"], "equal");
}

#[test]
fn verify_jacobian() {
    let (code, out) = run_bin(&["verify-paper", "--family", "jacobian", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let c = stage(&v, "criterion");
    assert_eq!(
        (c["observed"]["lhs"].as_u64(), c["observed"]["rhs"].as_i64()),
        (Some(6), Some(6))
    );
    assert_eq!(stage(&v, "length")["observed"], 6);
    assert_eq!(
        stage(&v, "sop-search")["observed"]["forms"],
        serde_json::json!(["x", "z"])
    );
}

#[test]
fn verify_fermat_skipping_slow_stages() {
    let (code, out) = run_bin(&[
        "verify-paper",
        "--family",
        "fermat",
        "--n",
        "3",
        "--skip-slow",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(stage(&v, "hilbert-numerator")["observed"], "1 - 3u^4 + 2u^6");
    assert_eq!(stage(&v, "multiplicity")["observed"], 12);
    assert_eq!(stage(&v, "radicality")["status"], "passed");
    assert_eq!(stage(&v, "symbolic-membership-level-3")["status"], "passed");
    assert_eq!(stage(&v, "local-multiplicity")["status"], "skipped");
}

#[test]
fn json_round_trips() {
    let (_, out) = run_bin(&["verify-paper", "--family", "jacobian", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap(), out.trim_end());
}

fn scalars(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => m.values().for_each(|x| scalars(x, out)),
        Value::Array(a) => a.iter().for_each(|x| scalars(x, out)),
        Value::Number(n) => out.push(n.to_string()),
        Value::String(s) => out.push(s.clone()),
        Value::Bool(b) => out.push(b.to_string()),
        Value::Null => out.push("none".into()),
    }
}

#[test]
fn text_and_json_carry_the_same_values() {
    let job = parse_jobfile(
        "ring Q[x,y,z];\nideal a = (x*y, x*z, y*z);\nprimes a = (x,y), (x,z), (y,z);\n\
         hilbert a;\ncriterion a --x [x+y+z] --f [x*y+x*z+y*z] 1 --f [x*y*z] 2;\nspread a;",
    )
    .unwrap();
    let (report, code) = run_job(&job, &json_opts());
    assert_eq!(code, 0);
    let text = render_text(&report);
    let mut leaves = Vec::new();
    scalars(&report, &mut leaves);
    let mut rest = text.as_str();
    for leaf in &leaves {
        let at = rest
            .find(leaf.as_str())
            .unwrap_or_else(|| panic!("`{leaf}` missing from text output"));
        rest = &rest[at + leaf.len()..];
    }
    let (tcode, tout) = run_jobfile(
        "ring Q[x,y,z];\nideal a = (x*y, x*z, y*z);\nprimes a = (x,y), (x,z), (y,z);\n\
         hilbert a;\ncriterion a --x [x+y+z] --f [x*y+x*z+y*z] 1 --f [x*y*z] 2;\nspread a;",
        &["--format", "text"],
    );
    assert_eq!(tcode, 0);
    assert_eq!(tout, text);
}

#[test]
fn exit_codes_follow_outcome_class() {
    let (code, out) = run_jobfile("ring Q[x,y];\nideal a = (x);\nmember [y] a;", &["--format", "json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["results"][0]["result"]["holds"], false);
    let (code, _) = run_jobfile("ring Q[x,y];\nideal a = (x);\nmember [x*y] a;", &[]);
    assert_eq!(code, 0);
    let (code, _) = run_jobfile("ring Q[x,y];\nideal a = (x + y^2);\nhilbert a;", &[]);
    assert_eq!(code, 1);
    let (code, out) = run_jobfile("ring Q[x,y];\nideal a = (x*", &["--format", "json"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["class"], "parse");
    let (code, out) = run_jobfile(
        "ring Q[x,y,z];\nideal a = (x + y^2, y^3);\nlocal-length a;",
        &["--local-N-cap", "16", "--format", "json"],
    );
    assert_eq!(code, 3);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["results"][0]["status"], "resource-limit");
    let (code, _) = run_jobfile("ring Q[x,y];\nideal i = (x^2, x*y, y^2);\nreduction (x^2) i 2;", &[]);
    assert_eq!(code, 2);
}

#[test]
fn local_length_through_the_cli() {
    let (code, out) = run_jobfile("ring Q[x,y];\nlocal-length (x + y^2, y^3);", &["--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["results"][0]["result"]["length"], 3);
}

#[test]
fn seeded_search_is_reproducible() {
    let job = "ring Q[x,y,z];\nideal a = (x*y, x*z, y*z);\nprimes a = (x,y), (x,z), (y,z);\nsop a;";
    let a = run_jobfile(job, &["--seed", "11", "--format", "json"]);
    let b = run_jobfile(job, &["--seed", "11", "--format", "json"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
}

#[test]
fn check_and_family_subcommands() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(b"ring Q[x];\nideal a = (x^2);\nlength a;").unwrap();
    let (code, out) = run_bin(&["check", f.path().to_str().unwrap()]);
    assert_eq!((code, out.trim()), (0, "ok: 1 command(s)"));
    let (code, out) = run_bin(&["family", "--family", "edge", "--n", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["results"][0]["result"]["minimal_primes"].as_array().unwrap().len(), 4);
}
