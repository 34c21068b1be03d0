use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_seshadri"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn validate_exit_codes() {
    let ok = run(&["validate", data("ppav3_jacobian.json").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));

    let bad = run(&["validate", data("invalid_degree.json").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stderr(&bad).contains("3! does not divide 20"));

    let curve = run(&["validate", data("invalid_curve.json").to_str().unwrap()]);
    assert_eq!(curve.status.code(), Some(1));
    assert!(stderr(&curve).contains("ε(A,L) ≥ 1"));
}

#[test]
fn parse_error_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("broken.json");
    fs::write(&p, "{\"id\": \"A\",\n \"dim\": 3,\n \"degree\": }").unwrap();
    let o = run(&["compute", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("broken.json:3:"), "{}", stderr(&o));

    let missing = run(&["validate", dir.path().join("nope.json").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));

    let usage = run(&["compute"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn compute_json() {
    let o = run(&["compute", data("ppav3_jacobian.json").to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "exact");
    assert_eq!(v["value"], "4/3");
    assert_eq!(v["exact"]["coeff"], "4/3");
    assert_eq!(v["exact"]["index"], 1);

    let o = run(&["compute", data("base_bounds.json").to_str().unwrap()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "bounds");
    assert_eq!(v["bounds"]["lo"]["coeff"], "1");
    assert_eq!(v["bounds"]["hi"]["coeff"], "6");
    assert_eq!(v["bounds"]["hi"]["decimal"]["approximate"], true);

    let o = run(&["compute", data("product_k1.json").to_str().unwrap()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "1");
}

#[test]
fn compute_json_is_deterministic() {
    let p = data("classifier_66.json");
    let a = run(&["compute", p.to_str().unwrap()]);
    let b = run(&["compute", p.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["candidate_set"], serde_json::json!(["1", "4/3"]));
    assert_eq!(v["bounds"]["hi"]["coeff"], "4/3");
}

#[test]
fn compute_text_and_explain() {
    let o = run(&["compute", data("product_k11.json").to_str().unwrap(), "--format", "text"]);
    assert!(stdout(&o).contains("ε = 4/3 (exact)"));
    assert!(stdout(&o).contains("below"));
    let o = run(&["explain", data("product_k11.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("[product]"));
    assert!(text.contains("witness:"));
}

#[test]
fn inconsistent_instance_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("x.json");
    // two elliptic degrees below (L²)^(1/2)/2 cannot coexist
    fs::write(
        &p,
        r#"{"id":"S","dim":2,"degree":40,"subvarieties":[
            {"spec":{"id":"E1","dim":1,"degree":1},"is_divisor":true},
            {"spec":{"id":"E2","dim":1,"degree":2},"is_divisor":true}]}"#,
    )
    .unwrap();
    let o = run(&["compute", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "inconsistent");
}

#[test]
fn batch_sweep() {
    let dir = tempfile::tempdir().unwrap();
    for d in (18..=174).step_by(6) {
        let text = format!(
            r#"{{"id":"A{d}","dim":3,"degree":{d},"subvarieties":[{{"spec":{{"id":"J","dim":2,"degree":2,"tags":{{"ppav_type":"jacobian_genus2"}}}},"is_divisor":true}}]}}"#
        );
        fs::write(dir.path().join(format!("a{d:03}.json")), text).unwrap();
    }
    let o = run(&["batch", dir.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["exact"], 27);
    let results = v["results"].as_array().unwrap();
    assert!(results.iter().all(|r| r["result"]["value"] == "4/3"));
    let files: Vec<&str> = results.iter().map(|r| r["file"].as_str().unwrap()).collect();
    let mut sorted = files.clone();
    sorted.sort();
    assert_eq!(files, sorted);
}

#[test]
fn batch_product_family() {
    let dir = tempfile::tempdir().unwrap();
    for k in 2..=20 {
        let text = format!(
            r#"{{"id":"JxE{k}","dim":3,"degree":{},"subvarieties":[{{"spec":{{"id":"J","dim":2,"degree":2,"tags":{{"ppav_type":"jacobian_genus2"}}}},"is_divisor":true}}],"tags":{{"product":{{"factor_id":"J","elliptic_degree":{k}}}}}}}"#,
            6 * k
        );
        fs::write(dir.path().join(format!("k{k:02}.json")), text).unwrap();
    }
    let o = run(&["batch", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("exact 4/3")).count(), 19);
    assert!(text.contains("exact 19"));
}

#[test]
fn batch_mixed_directory() {
    let o = run(&["batch", data("").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("invalid_degree.json") && text.contains("INVALID"));
    assert!(text.contains("invalid 2"));
}

#[test]
fn selfcheck_runs() {
    let o = run(&["selfcheck", "--iters", "50", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));
    let o = run(&["selfcheck", "--iters", "0"]);
    assert_eq!(o.status.code(), Some(0));
}
