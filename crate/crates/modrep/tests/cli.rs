use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn modrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modrep")).args(args).output().unwrap()
}

fn spec_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn check(group: &str, module: &str) -> (i32, Value) {
    let f = spec_file(&format!(r#"{{"version": 1, "group": "{group}", "module": "{module}"}}"#));
    let out = modrep(&["check", f.path().to_str().unwrap()]);
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json)
}

#[test]
fn check_exit_codes_follow_the_adequacy_lattice() {
    let (code, r) = check("SL2:7", "sym:1");
    assert_eq!(code, 0);
    assert_eq!(r["adequate"], true);
    let (code, r) = check("SL2:7", "sym:3");
    assert_eq!(code, 10);
    assert_eq!(r["ext1_self"], 1);
    assert_eq!(r["weakly_adequate"], true);
    let (code, r) = check("SL2:3", "sym:2");
    assert_eq!(code, 11);
    assert_eq!(r["weakly_adequate"], false);
    assert_eq!(r["group_order"], 24);
}

#[test]
fn input_errors_exit_2_with_a_position() {
    let f = spec_file("{\"version\": 1,\n \"group\": \"SL2:7\",\n \"module\": \"dual(sym:1\"\n}");
    let out = modrep(&["check", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3, column 23"), "{err}");

    let f = spec_file("{\"version\": 1,\n \"group\": [}");
    let out = modrep(&["check", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));

    // Not irreducible.
    let (code, _) = check("SL2:5", "tensor(sym:1,sym:1)");
    assert_eq!(code, 2);
    // Group larger than the cap.
    let f = spec_file(r#"{"version": 1, "group": "SL2:7", "module": "sym:1", "options": {"cap": 100}}"#);
    assert_eq!(modrep(&["check", f.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(modrep(&["check", "/nonexistent/spec.json"]).status.code(), Some(2));
}

#[test]
fn chop_and_ext_report_json() {
    let f = spec_file(r#"{"version": 1, "group": "SL2:5", "module": "tensor(sym:3,sym:3)"}"#);
    let path = f.path().to_str().unwrap();
    let out = modrep(&["chop", path, "--seed", "3"]);
    assert!(out.status.success());
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    let mut dims: Vec<u64> = Vec::new();
    for c in r["factors"].as_array().unwrap() {
        for _ in 0..c["multiplicity"].as_u64().unwrap() {
            dims.push(c["dim"].as_u64().unwrap());
        }
    }
    assert_eq!(dims, vec![1, 1, 3, 3, 3, 5]);

    let f = spec_file(r#"{"version": 1, "group": "SL2:5", "module": "sym:1"}"#);
    let out = modrep(&["ext", f.path().to_str().unwrap(), "--with", "sym:1"]);
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["ext1"], 1);
    let out = modrep(&["ext", f.path().to_str().unwrap(), "--with", "sym:2"]);
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["ext1"], 0);
}

#[test]
fn nonsplit_extension_expression_is_indecomposable_and_not_adequate() {
    let f = spec_file(r#"{"version": 1, "group": "SL2:5", "module": "ext(sym:2, sym:2, 0)"}"#);
    let out = modrep(&["chop", f.path().to_str().unwrap()]);
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["dim"], 6);
    assert_eq!(r["factors"][0]["multiplicity"], 2);
    let out = modrep(&["check", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ext_degree_flag_overrides_the_file() {
    let f = spec_file(r#"{"version": 1, "group": "SL2:5", "module": "sym:2"}"#);
    let out = modrep(&["check", f.path().to_str().unwrap(), "--ext-degree", "2", "--format", "summary"]);
    assert_eq!(out.status.code(), Some(10));
    assert!(String::from_utf8(out.stdout).unwrap().contains("over F_25"));
}

#[test]
fn filter_runs_only_the_named_scenario() {
    let out = modrep(&["verify-suite", "--filter", "ext_atlas:c"]);
    assert!(out.status.success());
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<&str> = r.as_array().unwrap().iter().map(|x| x["id"].as_str().unwrap()).collect();
    assert_eq!(ids, vec!["ext_atlas:c"]);
    assert_eq!(r[0]["status"], "pass");
}

#[test]
fn stretch_tier_without_fixtures_skips_optional_scenarios() {
    let dir = tempfile::tempdir().unwrap();
    let out = modrep(&["verify-suite", "--tier", "stretch", "--filter", "sporadic", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    let statuses: Vec<&str> = r.as_array().unwrap().iter().map(|x| x["status"].as_str().unwrap()).collect();
    assert_eq!(statuses, vec!["skipped", "skipped"]);
}

#[test]
fn malformed_fixture_fails_its_scenario() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("3A6.json"), "{\"field\": {\"p\": 5}}").unwrap();
    let out = modrep(&["verify-suite", "--tier", "stretch", "--filter", "sporadic:3A6", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r[0]["status"], "fail");
    assert!(r[0]["error"].is_string());
}

#[test]
fn unknown_filter_is_an_input_error() {
    assert_eq!(modrep(&["verify-suite", "--filter", "no_such_scenario"]).status.code(), Some(2));
}

#[test]
fn reports_are_identical_across_runs() {
    let args = ["verify-suite", "--filter", "delta_pk_check:5", "--filter", "selfdual_indec_check:5", "--seed", "7"];
    let a = modrep(&args);
    let b = modrep(&[&args[..], &["--threads", "3"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
