//! Runs the `spindefect` binary end to end.

use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_spindefect")).args(args).output().expect("binary runs");
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let (code, out, err) = run(&a);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("bad JSON ({e}): {out}\n{err}")))
}

#[test]
fn sigma_example() {
    let (code, out, _) = run(&["sigma", "3", "4", "--eps", "+1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "sigma(3,4,+1) = 1");
}

#[test]
fn sigma_huge_arguments() {
    let p = "1000000000000000000000000000000000000000000000000000000000000";
    let q = "999999999999999999999999999999999999999999999999999999999999";
    let (code, v) = run_json(&["sigma", q, p, "--eps", "-1"]);
    assert_eq!(code, 0);
    assert_eq!(v["sigma"], format!("-{q}"));
}

#[test]
fn poincare_sphere_all_spin() {
    let (code, out, _) = run(&["delta", "--seifert", "(2,1),(3,1),(5,-4)", "--all-spin"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].contains("delta = -8") && lines[0].contains("(5-5)"), "{out}");
}

#[test]
fn rp2_in_s4() {
    let (code, out, _) = run(&["rp2", "--bplus", "0", "--bminus", "0", "--sign", "0", "--euler", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("admissible") && out.contains("forced: e in {-2, 2}"), "{out}");
    let (code, v) = run_json(&["rp2", "--bplus", "0", "--bminus", "0", "--sign", "0", "--euler", "0"]);
    assert_eq!(code, 1);
    assert_eq!(v["admissible"], false);
}

#[test]
fn exit_codes() {
    // computed
    assert_eq!(run(&["evencf", "7", "4"]).0, 0);
    assert_eq!(run(&["definite", "--delta", "-8"]).0, 0);
    // excluded
    assert_eq!(run(&["feasible", "--bplus", "0", "--bminus", "0", "--seifert", "(2,1),(3,1),(5,-4)"]).0, 1);
    assert_eq!(run(&["char-sphere", "--bplus", "2", "--bminus", "0", "--n", "18"]).0, 1);
    // input errors name the token
    let (code, _, err) = run(&["sigma", "3", "4q", "--eps", "+1"]);
    assert_eq!(code, 2);
    assert!(err.contains("`4q`"), "{err}");
    let (code, _, err) = run(&["delta", "--seifert", "(2,1),(3,x),(5,-4)"]);
    assert_eq!(code, 2);
    assert!(err.contains('x'), "{err}");
    let (code, _, err) = run(&["delta", "--seifert", "(2,1),(3,1),(5,-4)", "--spin", "0,0,0"]);
    assert_eq!(code, 2, "{err}");
    assert_eq!(run(&["sigma", "2", "4"]).0, 2);
    assert_eq!(run(&["rp2", "--bplus", "-1", "--bminus", "0", "--euler", "2"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn negative_numbers_as_values() {
    let (code, out, err) = run(&["sigma", "-3", "4", "--eps", "-1"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.trim(), "sigma(-3,4,-1) = 3");
    let (code, out, _) = run(&["definite", "--delta", "-26"]);
    assert_eq!(code, 0);
    assert!(out.contains("(0, 10)"), "{out}");
}

#[test]
fn plumbing_star_and_json_graph() {
    let (code, v) = run_json(&["plumbing", "--star", "(-2; -2; -2,-2; -2,-2,-2,-2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["inertia"]["n_minus"], 8);
    assert_eq!(v["wu_vectors"].as_array().unwrap().len(), 1);
    let graph = v["graph"].to_string();
    let (code, w) = run_json(&["plumbing", "--graph-json", &graph, "--wu", "0,0,0,0,0,0,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(w["delta"], "-8");
}

#[test]
fn seifert_to_plumbing_gives_e8() {
    let (code, v) = run_json(&["seifert-to-plumbing", "--seifert", "(2,1),(3,1),(5,-4)"]);
    assert_eq!(code, 0);
    assert_eq!(v["delta"], "-8");
    assert_eq!(v["graph"]["vertices"].as_array().unwrap().len(), 8);
}

#[test]
fn cobordism_certificate() {
    let (_, v) = run_json(&["cobordism", "--seifert", "(2,1),(3,1),(5,-4)"]);
    assert_eq!(v["infinite_order"], true);
    let (_, v) = run_json(&["cobordism", "--lens", "3,1", "--eps", "+1"]);
    assert_eq!(v["z2_homology_sphere"], true);
}

#[test]
fn json_round_trip() {
    let cases: &[&[&str]] = &[
        &["sigma", "5", "8", "--eps", "+1", "--method", "all"],
        &["evencf", "-13", "8"],
        &["spin-list", "--seifert", "(2,1),(2,1),(3,1)"],
        &["delta", "--lens", "8,3", "--all-spin"],
        &["delta", "--seifert", "(2,-1),(3,-1),(3,8)"],
        &["plumbing", "--star", "(-1; -2; -3)", "--blow-down", "0"],
        &["seifert-to-plumbing", "--lens", "7,2", "--eps", "+1"],
        &["feasible", "--bplus", "3", "--bminus", "19", "--delta", "0"],
        &["definite", "--delta", "20"],
        &["cobordism", "--seifert", "(2,1),(3,1),(5,-4)"],
        &["rp2", "--bplus", "1", "--bminus", "0", "--euler", "-1"],
        &["char-sphere", "--bplus", "2", "--bminus", "0", "--sign", "2", "--n", "18"],
    ];
    for args in cases {
        let (code, first) = run_json(args);
        let argv: Vec<String> = first["input"]["argv"].as_array().unwrap().iter().map(|a| a.as_str().unwrap().to_string()).collect();
        let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
        let rerun = Command::new(env!("CARGO_BIN_EXE_spindefect")).args(&argv).output().unwrap();
        let second: Value = serde_json::from_slice(&rerun.stdout).unwrap();
        assert_eq!(rerun.status.code(), Some(code), "{args:?}");
        assert_eq!(first, second, "{args:?}");
    }
}

#[test]
fn selftest_passes() {
    let (code, out, _) = run(&["selftest"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
}
