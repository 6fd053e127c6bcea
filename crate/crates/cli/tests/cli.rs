use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordmeans"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compare_reports_exact_equality() {
    let o = run(&["compare", "S3xC3", "D18"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("="));
    let o = run(&["compare", "C315", "D6"]);
    assert_eq!(stdout(&o).lines().next(), Some("<"));
}

#[test]
fn compare_as_json() {
    let o = run(&["--format", "json", "compare", "C5xQ8", "D10", "--f", "psi"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["relation"], ">");
    assert_eq!(v["lhs"]["exact"], "567/1600");
    assert_eq!(v["rhs"]["exact"], "31/100");
}

#[test]
fn threshold_confirms_prediction() {
    let o = run(&["threshold", "C5xQ8", "--p", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with(">\n"), "{out}");
    assert!(out.contains("actual: confirmed"), "{out}");
}

#[test]
fn tables_print_truncated_and_rounded() {
    let out = stdout(&run(&["table", "--which", "1"]));
    assert!(
        out.contains("0.437") && out.contains("0.421") && out.contains("0.058"),
        "{out}"
    );
    let out = stdout(&run(&["--nearest", "table", "--which", "2"]));
    assert!(out.contains("0.340") && out.contains("0.178"), "{out}");
    let csv = stdout(&run(&["--format", "csv", "table", "--which", "2"]));
    assert_eq!(csv.lines().count(), 2);
}

#[test]
fn info_lists_invariants() {
    let out = stdout(&run(&["info", "Q8"]));
    assert!(out.contains("27/64"), "{out}");
    assert!(out.contains("nilpotent    true"), "{out}");
}

#[test]
fn bad_input_exits_with_two() {
    let o = run(&["info", "D7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert_eq!(run(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(
        run(&["threshold", "C5xQ8", "--p", "4"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_passes_on_a_small_corpus() {
    let o = run(&["verify", "--suite", "cascade", "--max-order", "30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: PASS"));
    let o = run(&[
        "--format",
        "json",
        "verify",
        "--suite",
        "two-nilpotent",
        "--max-order",
        "24",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
}
