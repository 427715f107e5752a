use std::process::{Command, Output};

use alcove_core::charring::TwistReport;
use alcove_core::{DeltaVector, Weight};
use serde_json::Value;

fn kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alcove-kit")).args(args).output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = kit(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn err_json(args: &[&str], code: i32) -> Value {
    let out = kit(args);
    assert_eq!(out.status.code(), Some(code));
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

#[test]
fn kl_of_short_a1_word_is_one() {
    let v = ok_json(&["kl", "--type", "A1", "--p", "3", "--y", "e", "--x", "s0 s1 s0"]);
    assert_eq!(v["polynomial"], "1");
    assert_eq!(v["length_x"], 3);
}

#[test]
fn lcf_in_a2_at_p3() {
    let v = ok_json(&["lcf", "--type", "A2", "--p", "3", "--weight", "1,1"]);
    let dv: DeltaVector = serde_json::from_value(v["delta_vector"].clone()).unwrap();
    assert_eq!(dv, DeltaVector::from_pairs(&[(Weight::from([1, 1]), 1), (Weight::from([0, 0]), -1)]));
    assert_eq!(v["dimension"], 7);
    assert_eq!(v["is_character"], true);
}

#[test]
fn twist_identity_for_a1() {
    let v = ok_json(&["verify-lemma32", "--type", "A1", "--p", "3", "--lambda", "1"]);
    let report: TwistReport = serde_json::from_value(v).unwrap();
    assert!(report.verdict);
    assert_eq!(report.formula, report.twisted);
}

#[test]
fn twist_sweep_reports_counts() {
    let v = ok_json(&["verify-lemma32", "--type", "A1", "--p", "5", "--sweep-bound", "40"]);
    // 5 lambda + 1 <= 40 for lambda = 0..7, and 5 lambda + 1 is never divisible by 5.
    assert_eq!(v["cases"], 8);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["passed"], 8);
}

#[test]
fn adjacency_follows_face_labels() {
    let v = ok_json(&["adjacent", "--type", "A2", "--p", "3", "--weight", "4,1", "--s", "s2"]);
    assert_eq!(v["adjacent"], serde_json::json!([3, 0]));
    let v = ok_json(&["path", "--type", "A2", "--p", "3", "--weight", "4,1"]);
    assert_eq!(v["paths"][0], serde_json::json!([[0, 0], [1, 1], [3, 0], [4, 1]]));
}

#[test]
fn partition_tools() {
    let v = ok_json(&["partition", "to-weight", "--lambda", "6,2,1", "--n", "3"]);
    assert_eq!(v["weight"], serde_json::json!([4, 1]));
    let v = ok_json(&["partition", "jantzen", "--lambda", "6,2,1", "--n", "3", "--p", "5"]);
    assert_eq!(v["in_region"], true);
    let v = ok_json(&["partition", "dual", "--lambda", "3,1"]);
    assert_eq!(v["dual"], serde_json::json!([2, 1, 1]));
}

#[test]
fn output_is_deterministic() {
    let args = ["pairs", "--type", "A2", "--p", "3", "--gen", "4,1", "--gen", "0,3"];
    assert_eq!(kit(&args).stdout, kit(&args).stdout);
}

#[test]
fn domain_errors_exit_one() {
    let v = err_json(&["lcf", "--type", "A2", "--p", "2", "--weight", "1,1"], 1);
    assert_eq!(v["kind"], "prime_below_coxeter");
    let v = err_json(&["lcf", "--type", "A2", "--p", "3", "--weight", "2,2"], 1);
    assert_eq!(v["kind"], "singular");
    let v = err_json(&["char", "--type", "A2", "--weight", "1"], 1);
    assert_eq!(v["kind"], "rank_mismatch");
    assert_eq!(err_json(&["char", "--type", "Q7", "--weight", "1"], 1)["kind"], "invalid_cartan_type");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(kit(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(err_json(&["rootsys"], 2)["kind"], "usage");
    assert_eq!(err_json(&["char", "--type", "A2", "--weight", "1,x"], 2)["kind"], "parse");
}

#[test]
fn batch_keeps_file_order() {
    let dir = std::env::temp_dir().join(format!("alcove-kit-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("weights.txt");
    std::fs::write(&path, "# dominant weights\n2,0\n0,0   # trivial\n\n1,1\n").unwrap();
    let out = kit(&["char", "--type", "A2", "--batch", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let dims: Vec<i64> = v.as_array().unwrap().iter().map(|r| r["dimension"].as_i64().unwrap()).collect();
    assert_eq!(dims, vec![6, 1, 8]);
    std::fs::remove_dir_all(&dir).unwrap();
}
