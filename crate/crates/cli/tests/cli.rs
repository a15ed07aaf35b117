use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn semiglue(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiglue"))
        .args(args)
        .env_remove("SEMIGLUE_DEADLINE_SECS")
        .env_remove("SEMIGLUE_THREADS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("semiglue-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn tangent_cone_of_a_three_generated_semigroup() {
    let out = semiglue(&["analyze", "--numerical", "3,5,7", "--tangent-cone", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["verdicts"]["tangent_cone_cm"]["holds"], true);
    assert!(v["result"]["verdicts"].get("projective_closure_acm").is_none());
}

#[test]
fn small_gluing_has_a_non_acm_closure() {
    let out = semiglue(&["glue", "--left", "3,5", "--right", "7,12", "--b", "1,1", "--a", "1,1", "--projective", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["generators"], serde_json::json!(["57", "95", "56", "96"]));
    assert_eq!(v["result"]["verdicts"]["projective_closure_acm"]["holds"], false);
}

#[test]
fn star_glue_rejects_a_non_star_gluing() {
    let out = semiglue(&["star-glue", "--left", "3,5", "--right", "7,12", "--b", "1,1", "--a", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a star gluing"));
}

#[test]
fn invalid_gluing_is_an_input_error() {
    // b has one coefficient for two left generators
    let out = semiglue(&["glue", "--left", "3,5", "--right", "7,12", "--b", "1", "--a", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors_carry_a_pointer() {
    let p = temp_file("negative.json", r#"{"type":"affine","generators":[["3","0"],["5","-1"]]}"#);
    let out = semiglue(&["analyze", "--input", p.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["pointer"], "/generators/1/1");
    let out = semiglue(&["analyze", "--numerical", "3,x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reported_input_reparses() {
    let out = semiglue(&["extend", "--affine", "3,0;5,0;0,1;1,3;2,3", "--l", "2", "--u", "0,0,0,0,3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let first = json(&out);
    let p = temp_file("echo.json", &first["input"].to_string());
    let again = json(&semiglue(&["extend", "--input", p.to_str().unwrap(), "--format", "json"]));
    assert_eq!(first["input"], again["input"]);
    assert_eq!(first["result"], again["result"]);
    assert_eq!(first["result"]["a"], serde_json::json!(["6", "9"]));
}

#[test]
fn resource_failures_exit_with_three() {
    let out = semiglue(&["--deadline-secs", "0", "analyze", "--numerical", "87,145,203,189,231", "--projective"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn matrix_a_pseudo_frobenius() {
    let v = json(&semiglue(&["pf", "--affine", "3,0;5,0;0,1;1,3;2,3", "--format", "json"]));
    assert_eq!(v["result"]["via_betti"], serde_json::json!([["7", "2"]]));
    assert_eq!(v["result"]["direct"], serde_json::json!([["7", "2"]]));
    assert_eq!(v["result"]["certified"], true);
}

#[test]
fn verify_on_a_job_file() {
    let p = temp_file(
        "join.json",
        r#"{"schema_version":"1","type":"numerical","generators":["3","5","7"],"params":{"right":["2","3"]}}"#,
    );
    let out = semiglue(&["verify", "join-sifr", "--input", p.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["reports"][0]["status"], "agree");
    assert_eq!(semiglue(&["verify", "no-such-statement"]).status.code(), Some(2));
}

#[test]
fn fixtures_are_deterministic() {
    let a = semiglue(&["fixtures", "--format", "json"]);
    let b = semiglue(&["--threads", "2", "fixtures", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert!(v["result"]["regressions"].as_array().unwrap().iter().all(|r| r["matches"] == true));
    let statuses: Vec<&str> = v["result"]["reports"].as_array().unwrap().iter().map(|r| r["status"].as_str().unwrap()).collect();
    assert!(!statuses.contains(&"conflict"));
    assert_eq!(statuses.iter().filter(|s| **s == "discrepancy").count(), 3);
}
