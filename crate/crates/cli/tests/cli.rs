//! End-to-end tests of the `permpoly` binary: verbs, pipes, exit codes
//! and byte-stable output.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_permpoly"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn generate_emits_graph_json() {
    let out = run(&["generate", "g1", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"n":6,"edges":[[0,2],[2,3],[1,3],[0,4],[4,5],[1,5]]}"#
    );
}

#[test]
fn permpoly_on_generated_hexagon() {
    let graph = stdout(&run(&["generate", "g1", "2"]));
    let out = run_with_stdin(&["permpoly"], &graph);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[4,0,9,0,6,0,1]");
}

#[test]
fn permpoly_routes_agree_on_g2() {
    let graph = stdout(&run(&["generate", "g2", "1"]));
    let fast = run_with_stdin(&["permpoly"], &graph);
    let oracle = run_with_stdin(&["permpoly", "--oracle"], &graph);
    let biadj = run_with_stdin(&["permpoly", "--biadjacency"], &graph);
    assert_eq!(stdout(&fast), stdout(&oracle));
    assert_eq!(stdout(&fast), stdout(&biadj));
    assert_eq!(stdout(&fast).trim(), "[9,0,15,0,7,0,1]");
}

#[test]
fn pretty_polynomial() {
    let graph = stdout(&run(&["generate", "cycle", "6"]));
    let out = run_with_stdin(&["permpoly", "--pretty"], &graph);
    assert_eq!(stdout(&out).trim(), "4 + 9x^2 + 6x^4 + x^6");
}

#[test]
fn analyze_rejects_even_theta_with_exit_zero() {
    let graph = stdout(&run(&["generate", "theta", "2", "2", "2"]));
    let out = run_with_stdin(&["analyze"], &graph);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed["resonance"]["verdict"], serde_json::json!(false));
    assert_eq!(parsed["bipartite"]["ok"], serde_json::json!(true));
    assert_eq!(parsed["planar"]["ok"], serde_json::json!(true));
}

#[test]
fn domain_errors_exit_one_with_json_on_stderr() {
    let graph = stdout(&run(&["generate", "cube"]));
    let out = run_with_stdin(&["permpoly"], &graph);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stderr).unwrap().trim()).unwrap();
    assert_eq!(err["kind"], serde_json::json!("ContainsEvenK23"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "dodecahedron"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "cycle", "two"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "theta", "1", "1", "3"]).status.code(), Some(1));
}

#[test]
fn charpoly_of_c4() {
    let graph = stdout(&run(&["generate", "cycle", "4"]));
    let out = run_with_stdin(&["charpoly"], &graph);
    assert_eq!(stdout(&out).trim(), "[0,0,-4,0,1]");
}

#[test]
fn orient_then_verify() {
    let graph = stdout(&run(&["generate", "g2", "1"]));
    let orient = run_with_stdin(&["orient"], &graph);
    assert!(orient.status.success());
    let orientation = stdout(&orient);
    let out = run_with_stdin(
        &["verify", "-", "--orientation", orientation.trim()],
        &graph,
    );
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed["all_cycles_odd"], serde_json::json!(true));
    assert_eq!(parsed["pfaffian"], serde_json::json!(true));
    assert_eq!(parsed["det_equals_matchings_squared"], serde_json::json!(true));
    assert_eq!(
        parsed["charpoly_equals_perm_poly_oracle"],
        serde_json::json!(true)
    );
    assert_eq!(parsed["perfect_matchings"], serde_json::json!("3"));
}

#[test]
fn oracle_view_reports_brute_force_results() {
    let graph = stdout(&run(&["generate", "cube"]));
    let out = run_with_stdin(&["oracle"], &graph);
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed["one_cycle_resonant"], serde_json::json!(false));
    assert_eq!(parsed["perfect_matchings"], serde_json::json!("9"));
    assert!(parsed["even_theta"].is_object());
}

#[test]
fn oracle_bound_env_var_is_honored() {
    let graph = stdout(&run(&["generate", "cycle", "6"]));
    let mut child = bin()
        .args(["oracle"])
        .env("PERMPOLY_ORACLE_BOUND", "4")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(graph.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(parsed["cycles"].is_null());
    assert!(parsed["even_theta_skipped"].is_string());
}

#[test]
fn generated_output_round_trips_unchanged() {
    for family in [
        vec!["generate", "g1", "3"],
        vec!["generate", "hex_chain", "4", "B"],
        vec!["generate", "hex_chain", "3", "L"],
        vec!["generate", "complete_bipartite", "2", "3"],
    ] {
        let graph = stdout(&run(&family));
        let analyzed = run_with_stdin(&["analyze"], &graph);
        assert!(analyzed.status.success(), "{family:?}");
        // Deterministic bytes for fixed input.
        assert_eq!(graph, stdout(&run(&family)));
    }
}

#[test]
fn branched_hexagon_matches_published_vector() {
    let graph = stdout(&run(&["generate", "hex_chain", "4", "B"]));
    let out = run_with_stdin(&["permpoly"], &graph);
    assert_eq!(
        stdout(&out).trim(),
        "[81,0,648,0,2106,0,3627,0,3645,0,2223,0,825,0,180,0,21,0,1]"
    );
}
