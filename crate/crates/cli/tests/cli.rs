use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rho-bounds")).args(args).env_remove("RHO_BOUNDS_JOBS").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn bound_on_path() {
    let out = run(&["bound", "--family", "path", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["report"]["phi_min"], 2.0);
    assert_eq!(v["report"]["argmin_levels"], serde_json::json!([1, 2, 3, 4]));
    assert!((v["report"]["rho"].as_f64().unwrap() - 1.801_937_735_8).abs() < 1e-9);
    assert_eq!(v["certificate"]["kind"], "None");
}

#[test]
fn bound_on_star_is_tight() {
    let out = run(&["bound", "--family", "star", "--n", "6", "--output", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "id,n,m,rho,phi_min,pivot,phi_n,hong_shu_fang,hong,stanley,brualdi_hoffman,max_degree,cert_kind,cert_t,slack_min"
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let rho: f64 = row[3].parse().unwrap();
    assert!((rho - 5f64.sqrt()).abs() < 1e-10);
    assert!((row[4].parse::<f64>().unwrap() - 5f64.sqrt()).abs() < 1e-12);
    assert_eq!((row[12], row[13]), ("dominating", "2"));
}

#[test]
fn bound_on_sequence_only() {
    let out = run(&["bound", "--degrees", "4,3,3,2,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let phis = &v["report"]["phi_at"];
    assert_eq!((phis[3].as_f64(), phis[4].as_f64()), (Some(3.0), Some(3.0)));
    assert_eq!(v["report"]["hong_shu_fang"], 3.0);
    assert!((v["report"]["shu_wu"][3].as_f64().unwrap() - 3.372_281_323).abs() < 1e-8);
    assert!(v["report"]["rho"].is_null());
}

#[test]
fn bound_refuses_disconnected_graph() {
    let out = run(&["bound", "--graph6", "C?"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("disconnected"));
}

#[test]
fn bound_reads_edge_list_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "4\n0 1\n1 2\n2 3\n").unwrap();
    let out = run(&["bound", "--input", file.path().to_str().unwrap(), "--format", "edgelist"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["id"], "Ch");
}

#[test]
fn verify_enumeration() {
    let out = run(&["verify", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["graphs_checked"], 728);
    assert_eq!(v["violations"], serde_json::json!([]));
}

#[test]
fn verify_graph6_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "C~\nCh").unwrap();
    let out = run(&["verify", "--input", file.path().to_str().unwrap(), "--checks", "soundness"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["graphs_checked"], 2);
}

#[test]
fn verify_equality_on_three_vertices() {
    let out = run(&["verify", "--n", "3", "--checks", "equality"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["graphs_checked"], 4);
    assert_eq!(v["tight_instances"]["equality"], 4);
}

#[test]
fn verify_output_is_deterministic_across_jobs() {
    let one = run(&["verify", "--n", "5", "--output", "csv", "--jobs", "1"]);
    let many = Command::new(env!("CARGO_BIN_EXE_rho-bounds"))
        .args(["verify", "--n", "5", "--output", "csv"])
        .env("RHO_BOUNDS_JOBS", "4")
        .output()
        .unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(stdout(&one).lines().count(), 729);
}

#[test]
fn config_errors_exit_with_two() {
    assert_eq!(run(&["verify", "--n", "8"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "4", "--checks", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "4", "--tol", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--input", "/nonexistent.g6"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--n", "8"]).status.code(), Some(2));
    assert_eq!(run(&["bound", "--graph6", ":Fa@x^"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn enumerate_lists_connected_graphs() {
    let out = run(&["enumerate", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 38);
    assert!(text.lines().any(|l| l == "C~"));
}

#[test]
fn replay_certificate() {
    let out = run(&["replay", "--graph6", "Cs", "--level", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["certificate"]["row_sums"].as_array().unwrap();
    assert!(rows.iter().all(|r| (r.as_f64().unwrap() - 3f64.sqrt()).abs() < 1e-12));
}

#[test]
fn replay_violation_exits_with_one() {
    // a negative tolerance turns the tight rows of K_3 into violations
    let out = run(&["replay", "--graph6", "Bw", "--level", "1", "--tol=-0.001"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(run(&["replay", "--graph6", "Bw", "--level", "9"]).status.code(), Some(2));
}
