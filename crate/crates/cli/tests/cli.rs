use std::process::{Command, Output};

fn sheffer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sheffer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn expand_identity_members() {
    let out = sheffer(&["expand", "--pair", "identity", "--kind", "s", "--r", "2", "--n", "0..2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0\t1\n1\ty\n2\ty^2 + 2*x + 2*z\n");
}

#[test]
fn expand_lower_factorial_zero() {
    let out = sheffer(&["expand", "--pair", "lower-factorial", "--n", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0\t1\n");
}

#[test]
fn expand_latex() {
    let out = sheffer(&["expand", "--pair", "identity", "--n", "2", "--format", "latex"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("${}_{s}s_{2}(x,y,z) = y^{2} + 2x + 2z$"), "{text}");
    assert!(text.starts_with("\\begin{tabular}"));
}

#[test]
fn expand_json_keeps_rationals_exact() {
    let out = sheffer(&["expand", "--pair", "bernoulli2", "--n", "1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let fam = &v["families"][0];
    assert_eq!(fam["pair"], "bernoulli2");
    assert_eq!(fam["kind"], "S");
    let terms = fam["members"][0]["terms"].as_array().unwrap();
    assert!(!terms.is_empty());
    for t in terms {
        let c = t["coeff"].as_str().unwrap();
        assert!(!c.contains('.'), "{c}");
    }
}

#[test]
fn expand_csv_header_and_rows() {
    let out = sheffer(&["expand", "--pair", "identity", "--n", "2", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("pair,kind,r,n,x,y,z,coeff"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows, ["identity,S,2,2,0,2,0,1", "identity,S,2,2,1,0,0,2", "identity,S,2,2,0,0,1,2"]);
}

#[test]
fn list_catalog() {
    let out = sheffer(&["list"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 14);

    let out = sheffer(&["list", "--pair", "hahn"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("tan t"));

    let out = sheffer(&["list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pairs"].as_array().unwrap().len(), 14);
}

#[test]
fn verify_passing_suites_exit_zero() {
    let out = sheffer(&["verify", "--suite", "monomiality", "--pair", "all", "--max-n", "6"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = sheffer(&["verify", "--suite", "monomiality", "--max-n", "0"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).lines().all(|l| !l.starts_with("FAIL")));
}

#[test]
fn verify_failure_exits_one_with_witness() {
    let out = sheffer(&["verify", "--suite", "reductions", "--max-n", "3"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    let fail = text.lines().find(|l| l.starts_with("FAIL")).unwrap();
    assert!(fail.contains("chebyshev"));
    assert!(fail.contains("expected"));
}

#[test]
fn verify_json_report() {
    let out = sheffer(&["verify", "--suite", "explicit", "--pair", "hahn", "--max-n", "2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["summary"]["total"], 3);
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["checks"][2]["n"], 2);
    assert_eq!(v["checks"][2]["verdict"], "PASS");
}

#[test]
fn verify_not_evaluable_does_not_fail() {
    let out = sheffer(&["verify", "--suite", "operational", "--kind", "r", "--max-n", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("N/A"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["expand", "--pair", "nope"][..],
        &["expand", "--r", "0"],
        &["expand", "--param", "zeta=1"],
        &["expand", "--param", "alpha=0.5"],
        &["verify", "--suite", "nope"],
        &["list", "--pair", "nope"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&sheffer(args)), 2, "{args:?}");
    }
}

#[test]
fn capacity_errors_exit_three() {
    assert_eq!(code(&sheffer(&["expand", "--n", "20"])), 3);
    assert_eq!(code(&sheffer(&["verify", "--suite", "explicit", "--max-n", "12"])), 3);
}

#[test]
fn out_file_and_determinism() {
    let dir = std::env::temp_dir().join(format!("sheffer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("members.json");
    let args = ["expand", "--pair", "all", "--kind", "r", "--r", "3", "--n", "0..4", "--format", "json"];
    let out = sheffer(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let first = std::fs::read(&path).unwrap();
    let again = sheffer(&args);
    assert_eq!(first, again.stdout);
    assert_eq!(again.stdout, sheffer(&args).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
