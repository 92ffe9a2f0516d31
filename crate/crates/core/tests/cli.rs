//! End-to-end checks of the binary: exit-code contract and JSON
//! round-tripping through the subcommands.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_filiform"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn binary")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn binary");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_str(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_emits_valid_document() {
    let out = run(&["build", "NF", "4"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["dim"], 4);
    assert_eq!(doc["label"], "NF_4");
}

#[test]
fn build_bad_params_exits_2() {
    // alpha must vanish in odd dimension
    let out = run(&["build", "F3graded", "5", "--alpha", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["build", "nosuchfamily", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["build", "NF", "4", "--alpha", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_round_trips_catalog_algebras() {
    for (family, n) in [("F1graded", "5"), ("R", "6"), ("nu2", "4")] {
        let built = run(&["build", family, n]);
        assert!(built.status.success());
        let out = run_with_stdin(&["analyze", "--json"], &stdout_str(&built));
        assert!(out.status.success(), "{family}");
        let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
        assert_eq!(doc["is_leibniz"], true);
    }
}

#[test]
fn analyze_reports_expected_dimensions() {
    let built = run(&["build", "F1graded", "5"]);
    let out = run_with_stdin(&["analyze"], &stdout_str(&built));
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("Der=6 ZL2=29 BL2=19 HL2=10"), "{text}");
}

#[test]
fn rigid_algebra_reported() {
    let built = run(&["build", "R", "6"]);
    let out = run_with_stdin(&["analyze"], &stdout_str(&built));
    let text = stdout_str(&out);
    assert!(text.contains("HL2=0 (rigid criterion met)"), "{text}");
}

#[test]
fn cohomology_on_non_leibniz_exits_3() {
    // [x1,x1] = x2, [x1,x2] = x3 is not Leibniz
    let doc = r#"{
        "schema_version": "1",
        "dim": 3,
        "brackets": [
            {"i": 1, "j": 1, "coeffs": {"2": "1"}},
            {"i": 1, "j": 2, "coeffs": {"3": "1"}}
        ]
    }"#;
    let out = run_with_stdin(&["cohomology"], doc);
    assert_eq!(out.status.code(), Some(3));
    // analyze still succeeds, skipping the cohomology block
    let out = run_with_stdin(&["analyze"], doc);
    assert!(out.status.success());
    assert!(stdout_str(&out).contains("skipped"));
}

#[test]
fn parse_error_exits_2() {
    let out = run_with_stdin(&["analyze"], "not json");
    assert_eq!(out.status.code(), Some(2));
    let out = run_with_stdin(
        &["analyze"],
        r#"{"schema_version": "1", "dim": 3, "brackets": [{"i": 9, "j": 1, "coeffs": {"2": "1"}}]}"#,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deform_and_integrable() {
    let dir = std::env::temp_dir().join("filiform-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let base = stdout_str(&run(&["build", "F2graded", "5"]));
    let psi1 = filiform::cohomology::named_cochain(
        filiform::cohomology::LabeledFamily::F2,
        5,
        &filiform::cohomology::CochainLabel::Psi(1),
    )
    .unwrap();
    let cochain = serde_json::to_string(&filiform::io::cochain_to_doc(&psi1)).unwrap();
    let cpath = dir.join("psi1.json");
    std::fs::write(&cpath, cochain).unwrap();
    let cpath = cpath.to_str().unwrap();

    let out = run_with_stdin(&["integrable", "--direction", cpath, "--json"], &base);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let verdict: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(verdict["integrable"], true);

    // the deformed algebra at any t stays Leibniz
    let out = run_with_stdin(&["deform", "--direction", cpath, "--t", "1/2"], &base);
    assert!(out.status.success());
    let deformed = stdout_str(&out);
    let check = run_with_stdin(&["analyze", "--json"], &deformed);
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&check)).unwrap();
    assert_eq!(doc["is_leibniz"], true);
}

#[test]
fn degenerate_witness() {
    let dir = std::env::temp_dir().join("filiform-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let src = stdout_str(&run(&["build", "NF", "4"]));
    let tgt_path = dir.join("abelian4.json");
    std::fs::write(
        &tgt_path,
        r#"{"schema_version": "1", "dim": 4, "brackets": []}"#,
    )
    .unwrap();
    let witness = serde_json::json!({
        "schema_version": "1",
        "dim": 4,
        "entries": [
            ["1", "0", "0", "0"],
            ["0", "t", "0", "0"],
            ["0", "0", "t^2", "0"],
            ["0", "0", "0", "t^3"]
        ]
    });
    let wpath = dir.join("witness.json");
    std::fs::write(&wpath, witness.to_string()).unwrap();
    let out = run_with_stdin(
        &[
            "degenerate",
            "--witness",
            wpath.to_str().unwrap(),
            "--target",
            tgt_path.to_str().unwrap(),
        ],
        &src,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout_str(&out).starts_with("PASS"));

    // identity witness cannot reach a different algebra
    let id_witness = serde_json::json!({
        "schema_version": "1",
        "dim": 4,
        "entries": [
            ["1", "0", "0", "0"],
            ["0", "1", "0", "0"],
            ["0", "0", "1", "0"],
            ["0", "0", "0", "1"]
        ]
    });
    std::fs::write(&wpath, id_witness.to_string()).unwrap();
    let out = run_with_stdin(
        &[
            "degenerate",
            "--witness",
            wpath.to_str().unwrap(),
            "--target",
            tgt_path.to_str().unwrap(),
        ],
        &src,
    );
    assert!(out.status.success());
    assert!(stdout_str(&out).starts_with("FAIL"));
}

#[test]
fn verify_paper_exit_and_determinism() {
    let a = run(&["verify-paper", "--n-range", "3..4", "--json"]);
    assert!(a.status.success());
    let b = run(&["verify-paper", "--n-range", "3..4", "--json"]);
    assert_eq!(stdout_str(&a), stdout_str(&b), "reports must be byte-identical");
    let report: serde_json::Value = serde_json::from_str(&stdout_str(&a)).unwrap();
    assert!(report["claims"].as_array().unwrap().len() > 50);

    let bad = run(&["verify-paper", "--n-range", "1..4"]);
    assert_eq!(bad.status.code(), Some(2));
    let bad = run(&["verify-paper", "--n-range", "oops"]);
    assert_eq!(bad.status.code(), Some(2));
}
