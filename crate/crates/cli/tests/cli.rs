use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecohom")).args(args).output().expect("binary runs")
}

fn run_file(cmd: &str, file: &str, extra: &[&str]) -> Output {
    let path = data(file);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn cohomology_golden() {
    let o = run_file("cohomology", "so3.json", &[]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), golden("so3_cohomology.txt"));

    let o = run_file("cohomology", "heisenberg.json", &["--representatives"]);
    assert_eq!(stdout(&o), golden("heisenberg_representatives.txt"));

    let o = run_file("cohomology", "so3.json", &["--json"]);
    assert_eq!(stdout(&o), golden("so3_cohomology.json"));
}

#[test]
fn abelian_five() {
    let o = run_file("cohomology", "abelian5.json", &[]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("betti: 1 5 10 10 5 1\n"));
}

#[test]
fn dimension_cap() {
    let o = run_file("cohomology", "abelian21.json", &[]);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).is_empty());
    let o = run_file("cohomology", "abelian5.json", &["--max-dim", "4"]);
    assert_eq!(code(&o), 4);
}

#[test]
fn validate_exit_codes() {
    assert_eq!(code(&run_file("validate", "so3.json", &[])), 0);

    let o = run_file("validate", "so3_broken.json", &[]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("(1, 2, 3): residual (0, -1, 0)"), "{}", stderr(&o));

    let o = run_file("validate", "so3_axis.json", &[]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("[e1, e3] = -e2"), "{}", stderr(&o));

    assert_eq!(code(&run_file("validate", "unknown_field.json", &[])), 3);
    assert_eq!(code(&run_file("validate", "missing.json", &[])), 3);
}

#[test]
fn quotient_golden() {
    let o = run_file("quotient", "torus2_alpha.json", &[]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), golden("torus2_alpha_quotient.txt"));

    let o = run_file("quotient", "heisenberg_center.json", &[]);
    assert_eq!(stdout(&o), golden("heisenberg_center_quotient.txt"));

    let o = run_file("quotient", "so3_discrete.json", &[]);
    assert!(stdout(&o).contains("betti: 1 0 0 1\n"));

    assert_eq!(code(&run_file("quotient", "so3_axis.json", &[])), 2);
    assert_eq!(code(&run_file("quotient", "so3.json", &[])), 3);
}

#[test]
fn quotient_without_chain_check() {
    let o = run_file("quotient", "heisenberg_center.json", &["--no-chain-iso"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("chain_iso: skipped\n"));
}

#[test]
fn quotient_json() {
    let o = run_file("quotient", "torus2_alpha.json", &["--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["quotient_dim"], 1);
    assert_eq!(v["abelian_quotient"], true);
    assert_eq!(v["cohomology"]["betti"], serde_json::json!([1, 1]));
}

#[test]
fn catalog_commands() {
    let o = run(&["catalog", "list"]);
    assert_eq!(stdout(&o), golden("catalog_list.txt"));

    let o = run(&["catalog", "show", "so3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("expected betti: 1 0 0 1\n"));

    let alpha = run(&["--json", "catalog", "show", "torus2_alpha"]);
    let two = run(&["--json", "catalog", "show", "torus2_two_components"]);
    let a: serde_json::Value = serde_json::from_str(&stdout(&alpha)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&two)).unwrap();
    assert_eq!(a["document"]["algebra"], b["document"]["algebra"]);
    assert_eq!(a["document"]["ideal"], b["document"]["ideal"]);
    assert_eq!(a["expected_betti"], b["expected_betti"]);
    assert!(b["note"].as_str().unwrap().contains("two components"));

    assert_eq!(code(&run(&["catalog", "show", "nope"])), 3);
}

#[test]
fn catalog_documents_round_trip_through_files() {
    let dir = std::env::temp_dir().join(format!("liecohom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for key in stdout(&run(&["catalog", "list"])).lines() {
        let shown: serde_json::Value = serde_json::from_str(&stdout(&run(&["--json", "catalog", "show", key]))).unwrap();
        let path = dir.join(format!("{key}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(&shown["document"]).unwrap()).unwrap();
        let cmd = if shown["document"].get("ideal").is_some() { "quotient" } else { "cohomology" };
        let o = run(&["--json", cmd, path.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{key}: {}", stderr(&o));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let betti = if cmd == "quotient" { &v["cohomology"]["betti"] } else { &v["betti"] };
        assert_eq!(betti, &shown["expected_betti"], "{key}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn selftest_tolerance_failure() {
    let o = run(&["selftest", "--tol", "1e-15"]);
    assert_eq!(code(&o), 5);
    assert!(stdout(&o).contains("maurer_cartan    FAIL"));
}

#[test]
fn usage_errors_are_parse_errors() {
    assert_eq!(code(&run(&["frobnicate"])), 3);
    assert_eq!(code(&run(&["--help"])), 0);
}
