//! End-to-end tests of the binary: JSON schemas, determinism, exit codes,
//! and diagnostics.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;
use trailrank::Decision;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_trailrank"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const K33: &str = "1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n";

#[test]
fn decide_skew_k33_is_dependent_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let edges = write(dir.path(), "k33.edges", K33);
    let out = run(&["decide", "skew", "--n", "6", "--edges", &edges]);
    let decision: Decision = serde_json::from_slice(&out.stdout).unwrap();
    assert!(out.status.success());
    assert!(!decision.independent);
    assert!(decision.certificate.is_none());
    assert_eq!(decision.prefilter, Some(true));
    assert_eq!(decision.stats.time_ms, None);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let edges = write(dir.path(), "k33.edges", K33);
    let args = ["decide", "skew", "--n", "6", "--edges", edges.as_str()];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);

    let oracle_args = [
        "oracle", "--model", "skew", "--n", "6", "--edges", &edges, "--trials", "5", "--seed",
        "42",
    ];
    let a = run(&oracle_args);
    let b = run(&oracle_args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn timings_flag_fills_the_stats() {
    let dir = TempDir::new().unwrap();
    let edges = write(dir.path(), "k33.edges", K33);
    let out = run(&["decide", "skew", "--n", "6", "--edges", &edges, "--timings"]);
    let decision: Decision = serde_json::from_slice(&out.stdout).unwrap();
    assert!(decision.stats.time_ms.is_some());
}

#[test]
fn decide_rect_reports_cells_and_convention() {
    let dir = TempDir::new().unwrap();
    let cells = write(
        dir.path(),
        "grid.cells",
        "1 1\n1 2\n1 3\n2 1\n2 2\n2 3\n3 1\n3 2\n",
    );
    let out = run(&["decide", "rect", "--m", "3", "--n", "3", "--cells", &cells]);
    let v = stdout_json(&out);
    assert_eq!(v["model"], "rect");
    assert_eq!(v["ambient"]["m"], 3);
    assert_eq!(v["ambient"]["n"], 3);
    assert_eq!(v["independent"], true);
    assert_eq!(v["cells"].as_array().unwrap().len(), 8);
    assert!(v["vertex_convention"].as_str().unwrap().contains("n + i"));
    let order: Vec<usize> = v["certificate"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as usize)
        .collect();
    assert_eq!(order.len(), 6);
}

#[test]
fn certificate_verify_accepts_and_rejects() {
    let dir = TempDir::new().unwrap();
    let tri = write(dir.path(), "tri.edges", "1 2\n1 3\n2 3\n");
    let v = stdout_json(&run(&[
        "certificate", "verify", "--n", "3", "--edges", &tri, "--order", "1,2,3",
    ]));
    assert_eq!(v["valid"], true);

    let k33 = write(dir.path(), "k33.edges", K33);
    let v = stdout_json(&run(&[
        "certificate", "verify", "--n", "6", "--edges", &k33, "--order", "1,2,3,4,5,6",
    ]));
    assert_eq!(v["valid"], false);

    let out = run(&[
        "certificate", "verify", "--n", "3", "--edges", &tri, "--order", "1,1,3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_k33_ranks_are_pinned() {
    let dir = TempDir::new().unwrap();
    let edges = write(dir.path(), "k33.edges", K33);
    let v = stdout_json(&run(&[
        "oracle", "--model", "skew", "--n", "6", "--edges", &edges, "--trials", "3", "--seed",
        "0",
    ]));
    assert_eq!(v["ranks"], serde_json::json!([8, 8, 8]));
    assert_eq!(v["independent"], false);
    assert_eq!(v["support_size"], 9);
}

#[test]
fn oracle_rect_expects_cells() {
    let dir = TempDir::new().unwrap();
    let cells = write(dir.path(), "one.cells", "2 3\n");
    let v = stdout_json(&run(&[
        "oracle", "--model", "rect", "--m", "3", "--n", "4", "--cells", &cells,
    ]));
    assert_eq!(v["independent"], true);
    assert_eq!(v["ambient"]["m"], 3);

    let out = run(&["oracle", "--model", "rect", "--n", "4", "--cells", &cells]);
    assert_eq!(out.status.code(), Some(2), "missing --m is an input error");
}

#[test]
fn complete_quartet_restricts_exactly() {
    let dir = TempDir::new().unwrap();
    let values = write(
        dir.path(),
        "q.values",
        "1 2 0\n1 3 3\n1 4 -2\n2 3 5\n2 4 0\n",
    );
    let v = stdout_json(&run(&["complete", "--n", "4", "--values", &values]));
    assert_eq!(v["independent"], true);
    assert_eq!(v["topologies_tried"], 1);
    assert_eq!(v["used_certificate_caterpillar"], true);
    let metric = v["metric"].as_array().unwrap();
    assert_eq!(metric.len(), 6);
    for entry in v["values"].as_array().unwrap() {
        assert!(metric.contains(entry), "prescribed value surfaced intact");
    }
    assert!(v["tree"]["newick"].as_str().unwrap().ends_with(';'));
}

#[test]
fn complete_rejects_dependent_patterns_in_json() {
    let dir = TempDir::new().unwrap();
    let values = write(
        dir.path(),
        "full.values",
        "1 2 1\n1 3 1\n1 4 1\n2 3 1\n2 4 1\n3 4 1\n",
    );
    let out = run(&["complete", "--n", "4", "--values", &values]);
    let v = stdout_json(&out);
    assert_eq!(v["independent"], false);
    assert!(v.get("tree").is_none());
    assert!(v.get("metric").is_none());
    assert_eq!(v["decision"]["independent"], false);
}

#[test]
fn complete_accepts_fractional_values() {
    let dir = TempDir::new().unwrap();
    let values = write(dir.path(), "frac.values", "1 2 1/3\n3 4 -7/2\n");
    let v = stdout_json(&run(&["complete", "--n", "4", "--values", &values]));
    assert_eq!(v["independent"], true);
    let metric = v["metric"].as_array().unwrap();
    let find = |i: u64, j: u64| {
        metric
            .iter()
            .find(|e| e["i"] == i && e["j"] == j)
            .unwrap()["value"]
            .as_str()
            .unwrap()
            .to_string()
    };
    assert_eq!(find(1, 2), "1/3");
    assert_eq!(find(3, 4), "-7/2");
}

#[test]
fn rank_full_pair_set_is_2n_minus_3() {
    let dir = TempDir::new().unwrap();
    let edges = write(
        dir.path(),
        "full4.edges",
        "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n",
    );
    let v = stdout_json(&run(&["rank", "--n", "4", "--edges", &edges]));
    assert_eq!(v["rank"], 5);
    assert_eq!(v["independent"], false);

    let cells = write(
        dir.path(),
        "grid.cells",
        "1 1\n1 2\n1 3\n2 1\n2 2\n2 3\n3 1\n3 2\n3 3\n",
    );
    let v = stdout_json(&run(&[
        "rank", "--model", "rect", "--m", "3", "--n", "3", "--cells", &cells,
    ]));
    assert_eq!(v["rank"], 8);
    assert_eq!(v["size"], 9);
}

#[test]
fn trees_enumerate_counts() {
    let v = stdout_json(&run(&["trees", "enumerate", "--n", "5"]));
    assert_eq!(v["count"], 15);
    let trees = v["trees"].as_array().unwrap();
    assert_eq!(trees.len(), 15);
    let unique: std::collections::BTreeSet<&str> =
        trees.iter().map(|t| t.as_str().unwrap()).collect();
    assert_eq!(unique.len(), 15, "Newick topologies are distinct");

    let out = run(&["trees", "enumerate", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2), "cap guards the enumeration");
}

#[test]
fn fourpoint_verdicts() {
    let dir = TempDir::new().unwrap();
    let good = write(
        dir.path(),
        "good.metric",
        "4\n1 2 0\n1 3 3\n1 4 -2\n2 3 5\n2 4 0\n3 4 -1\n",
    );
    let v = stdout_json(&run(&["fourpoint", "--metric", &good]));
    assert_eq!(v["tree_metric"], true);
    assert_eq!(v["violating_quadruple"], serde_json::Value::Null);

    let bad = write(
        dir.path(),
        "bad.metric",
        "4\n1 2 0\n1 3 3\n1 4 -2\n2 3 5\n2 4 1\n3 4 -1\n",
    );
    let v = stdout_json(&run(&["fourpoint", "--metric", &bad]));
    assert_eq!(v["tree_metric"], false);
    assert_eq!(v["violating_quadruple"], serde_json::json!([1, 2, 3, 4]));

    let partial = write(dir.path(), "partial.metric", "4\n1 2 0\n");
    let out = run(&["fourpoint", "--metric", &partial]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("missing entry"), "stderr: {err}");
}

#[test]
fn crosscheck_exhaustive_small() {
    let out = run(&["crosscheck", "--n", "4", "--mode", "exhaustive"]);
    let v = stdout_json(&out);
    assert_eq!(v["checked"], 64);
    assert_eq!(v["disagreements"], 0);
    assert_eq!(v["certificate_failures"], 0);

    let seq = run(&[
        "crosscheck", "--n", "5", "--mode", "random", "--samples", "60", "--seed", "9",
    ]);
    let par = run(&[
        "crosscheck", "--n", "5", "--mode", "random", "--samples", "60", "--seed", "9",
        "--parallel",
    ]);
    assert_eq!(seq.stdout, par.stdout, "parallel run is byte-identical");
}

#[test]
fn malformed_files_get_line_numbered_diagnostics() {
    let dir = TempDir::new().unwrap();
    let edges = write(dir.path(), "bad.edges", "1 2\n# fine\n2 9\n");
    let out = run(&["decide", "skew", "--n", "6", "--edges", &edges]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.edges:3"), "stderr: {err}");

    let dup = write(dir.path(), "dup.edges", "1 2\n2 1\n");
    let out = run(&["decide", "skew", "--n", "6", "--edges", &dup]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("dup.edges:2"), "stderr: {err}");
    assert!(err.contains("duplicate edge (1, 2)"), "stderr: {err}");

    let vals = write(dir.path(), "bad.values", "1 2 x/y\n");
    let out = run(&["complete", "--n", "4", "--values", &vals]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.values:1"), "stderr: {err}");
}

#[test]
fn values_domain_mismatch_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    // 7 is out of range for n = 4 and caught by the parser with a line
    // number rather than later by the library.
    let vals = write(dir.path(), "range.values", "1 7 3\n");
    let out = run(&["complete", "--n", "4", "--values", &vals]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("range.values:1"));
}
