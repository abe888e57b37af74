use std::process::{Command, Output};

use adder2d::ir::Circuit;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adder2d")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn depth_block_sum_report() {
    let v =
        json(&["depth", "--n", "9", "--variant", "optimized", "--cost-model", "t14s1", "--mode", "paper"]);
    assert_eq!(v["total"], 266);
    assert_eq!(v["mode"], "paper");
    let rows = v["per_phase"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().any(|r| r["phase"] == "Phase2" && r["depth"] == 34));
}

#[test]
fn depth_table_output() {
    let out = run(&["depth", "--n", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("total (block sum) 266"));
    assert!(text.contains("phase1-2"));
}

#[test]
fn depth_free_mode() {
    let v = json(&["depth", "--n", "4", "--variant", "baseline", "--mode", "free"]);
    assert_eq!(v["mode"], "free");
    assert_eq!(v["total"], v["total_asap"]);
}

#[test]
fn verify_exhaustive_four_bits() {
    let v = json(&["verify", "--n", "4", "--mode", "exhaustive"]);
    assert_eq!(v["pairs"], 256);
    assert_eq!(v["baseline_failures"], 0);
    assert_eq!(v["optimized_failures"], 0);
    assert_eq!(v["disagreements"], 0);
}

#[test]
fn random_mode_is_deterministic() {
    let args = ["--json", "verify", "--n", "16", "--mode", "random", "--samples", "200", "--seed", "11"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!((v["pairs"].as_u64(), v["seed"].as_u64()), (Some(200), Some(11)));
}

#[test]
fn thread_cap_gives_same_report() {
    let args = ["--json", "verify", "--n", "9", "--mode", "random", "--samples", "500", "--seed", "2"];
    let one =
        Command::new(env!("CARGO_BIN_EXE_adder2d")).args(args).env("ADDER2D_THREADS", "1").output().unwrap();
    assert_eq!(one.stdout, run(&args).stdout);
    let bad =
        Command::new(env!("CARGO_BIN_EXE_adder2d")).args(args).env("ADDER2D_THREADS", "0").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn decomp_check_peres() {
    let v = json(&["decomp-check", "--scheme", "peres"]);
    assert_eq!(v["ok"], true);
    assert!(v["checks"][0]["max_error"].as_f64().unwrap() < 1e-10);
    let all = json(&["decomp-check"]);
    assert_eq!(all["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn qec_count() {
    let v = json(&["qec", "--nu", "100", "--ne", "50", "--level", "2"]);
    assert_eq!(v["physical_gates"], "250000");
    assert_eq!(v["by_level"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["depth", "--n", "8"],
        vec!["depth", "--n", "9", "--cost-model", "t13s2"],
        vec!["verify", "--n", "9", "--bogus"],
        vec!["verify", "--n", "16", "--mode", "exhaustive"],
        vec!["generate", "--n", "4", "--scheme", "nope"],
        vec![],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn generate_text_round_trips() {
    let path = std::env::temp_dir().join(format!("adder2d-cli-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    let v = json(&["generate", "--n", "4", "--variant", "baseline", "--expand", "--out", p]);
    let c = Circuit::from_text(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["gates"].as_u64(), Some(c.len() as u64));
    assert_eq!(v["counts"]["TOFFOLI"], 0);
    assert_eq!(c.n_qubits, 13);
}

#[test]
fn generate_qasm() {
    let out = run(&["generate", "--n", "4", "--format", "qasm"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("OPENQASM 2.0;"));
    assert!(text.contains("qreg q[13];"));
    assert!(text.contains("ccx ") && text.contains("swap "));
}

#[test]
fn export_layout() {
    let out = run(&["export-layout", "--n", "9"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((v["rows"].as_u64(), v["cols"].as_u64()), (Some(11), Some(3)));
}
