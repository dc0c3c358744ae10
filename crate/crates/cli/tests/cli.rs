use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_newton-zeta"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn full_zeta(germ: &str) -> String {
    let o = run(&["zeta", "--germ", germ, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    json(&o)["full"]["pretty"].as_str().unwrap().to_string()
}

#[test]
fn zeta_of_known_germs() {
    assert_eq!(full_zeta("z1^2 + z2^3 - s"), "(1-t^2) (1-t^3) (1-t^6)^-1");
    assert_eq!(full_zeta("z1^2 - s^2"), "(1-t)^2");
    assert_eq!(full_zeta("z1^2 - s^3"), "(1-t^2)");
    assert_eq!(full_zeta("s"), "1");
}

#[test]
fn zeta_json_schema() {
    let v = json(&run(&["zeta", "--germ", "z1^2 + z2^3 - s", "--format", "json"]));
    assert_eq!(v["vars"], serde_json::json!(["s", "z1", "z2"]));
    assert_eq!(v["torus"]["pretty"], "(1-t^6)^-1");
    assert_eq!(v["full"]["degree"], -1);
    assert!(v["full"]["factors"].is_array());
    assert_eq!(v["nondegeneracy"]["status"], "unchecked");
}

#[test]
fn pretty_zeta_warns_on_unchecked_faces() {
    let o = run(&["zeta", "--germ", "z1^2 + z2^3 - s"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("full:   (1-t^2) (1-t^3) (1-t^6)^-1"));
    assert!(stderr(&o).starts_with("warning: "));
}

#[test]
fn diagram_lists_facets() {
    let v = json(&run(&["diagram", "--germ", "z1^2 - s^3", "--format", "json"]));
    let sets = v["index_sets"].as_array().unwrap();
    assert_eq!(sets.len(), 2);
    assert_eq!(sets[0]["zeta"]["pretty"], "(1-t)^-1");
    let facet = &sets[1]["facets"][0];
    assert_eq!(facet["normal"], serde_json::json!([2, 3]));
    assert_eq!(facet["m"], 2);
    assert_eq!(facet["nvol"], 1);
    assert_eq!(facet["exponent"], 1);
    assert_eq!(v["full"]["pretty"], "(1-t^2)");
    let o = run(&["diagram", "--germ", "z1^2 - s^3"]);
    assert!(stdout(&o).contains("facet normal (2,3): m = 2"));
}

#[test]
fn check_reports_counterexample() {
    let o = run(&["check", "--germ", "z1^2 - 2*s*z1 + s^2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["nondegeneracy"]["status"], "counterexample");
    let bad: Vec<&Value> = v["nondegeneracy"]["faces"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|f| f["verdict"] == "counterexample_found")
        .collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0]["normal"], serde_json::json!([1, 1]));
}

#[test]
fn check_marks_high_dimensional_faces_unchecked() {
    let o = run(&["check", "--germ", "z1^3 + z2^3 + z1*z2*s"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("unchecked (dimension 2)"));
    assert!(stdout(&o).contains("status: unchecked"));
}

#[test]
fn oracle_compare_cone_identity() {
    let o = run(&["oracle-compare", "--mode", "example1", "--germ", "z1^2 + z2^3 + z1*z2*z3 + z3^4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(" 0 failed"));
}

#[test]
fn oracle_compare_mixed_identity() {
    let o = run(&[
        "oracle-compare", "--mode", "example2", "--f0", "z1^2 + z2^2 + z3^2", "--f1", "z1 + 1", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["passed"], 4);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().filter(|c| c["l"].as_u64() <= Some(1)).all(|c| c["status"] == "inapplicable"));
}

#[test]
fn oracle_compare_single_variable() {
    let o = run(&["oracle-compare", "--germ", "z1^5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 passed, 0 failed"));
}

#[test]
fn oracle_compare_random_is_reproducible() {
    let a = run(&["oracle-compare", "--random", "4", "--seed", "9"]);
    let b = run(&["oracle-compare", "--random", "4", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn oracle_compare_wrong_arity() {
    assert_eq!(run(&["oracle-compare", "--mode", "example2", "--f0", "z1^2"]).status.code(), Some(1));
    assert_eq!(run(&["oracle-compare", "--mode", "example1", "--f0", "z1^2"]).status.code(), Some(1));
}

#[test]
fn stdin_and_file_sources() {
    let o = run_stdin(&["zeta", "--format", "json"], "z1^2 - s^2\n");
    assert_eq!(json(&o)["full"]["pretty"], "(1-t)^2");

    let dir = std::env::temp_dir().join(format!("newton-zeta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("germ.json");
    std::fs::write(
        &path,
        r#"{"vars":["s","z1"],"terms":[{"exp":[0,2],"coef":1},{"exp":[3,0],"coef":"-1"}]}"#,
    )
    .unwrap();
    let o = run(&["zeta", "--germ-file", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(json(&o)["full"]["pretty"], "(1-t^2)");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn explicit_variable_names() {
    let o = run(&["zeta", "--germ", "x^2 + y^3 - t", "--vars", "t,x,y", "--format", "json"]);
    assert_eq!(json(&o)["full"]["pretty"], "(1-t^2) (1-t^3) (1-t^6)^-1");
}

#[test]
fn input_errors_exit_1() {
    for bad in ["z1 + 1", "z1^", "z1^-2 + s"] {
        let o = run(&["zeta", "--germ", bad]);
        assert_eq!(o.status.code(), Some(1), "{bad}");
        assert!(stderr(&o).starts_with("error: "));
    }
    let o = run(&["zeta", "--germ", "x + s", "--vars", "s,z1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn diagram_without_deformation_terms() {
    let v = json(&run(&["diagram", "--germ", "z1*z2", "--format", "json"]));
    for row in v["index_sets"].as_array().unwrap() {
        assert!(row["facets"].as_array().unwrap().is_empty());
        assert_eq!(row["zeta"]["pretty"], "1");
    }
    let v = json(&run(&["diagram", "--germ", "s", "--format", "json"]));
    assert_eq!(v["index_sets"][0]["facets"][0]["factor"], "(1-t)^-1");
    assert!(v["index_sets"][1]["facets"].as_array().unwrap().is_empty());
}

#[test]
fn check_verifies_two_branches() {
    let v = json(&run(&["check", "--germ", "z1^2 - s^2", "--format", "json"]));
    assert_eq!(v["nondegeneracy"]["status"], "verified");
    assert!(v["nondegeneracy"]["faces"].as_array().unwrap().iter().all(|f| f["verdict"] == "verified"));
}

#[test]
fn pencil_with_degenerate_support_has_nothing_to_check() {
    let o = run(&["oracle-compare", "--mode", "example2", "--f0", "z1^2*z2", "--f1", "z2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["failed"], 0);
    let o = run(&["oracle-compare", "--mode", "example2", "--f0", "z1^2", "--f1", "z1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("identity-inapplicable (l ≤ 1)"));
}

#[test]
fn pretty_and_json_agree() {
    for germ in ["z1^2 + z2^3 - s", "z1^3 + z2^3 + z1*z2*s", "z1^2*z2 + z2^4 - s^2*z1"] {
        let full = full_zeta(germ);
        let o = run(&["zeta", "--germ", germ]);
        assert!(stdout(&o).contains(&format!("full:   {full}\n")), "{germ}");
    }
}
