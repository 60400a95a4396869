use std::path::Path;
use std::process::{Command, Output};

use edge_expand::expansion::make_partition;
use edge_expand::format::{parse_edge_list, parse_vertex_list};
use edge_expand::generators::{build_gadget, GadgetSpec};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edge-expand"))
        .args(args)
        .env_remove("EDGE_EXPAND_MAX_ENUM_N")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    (
        out.status.code().unwrap(),
        serde_json::from_slice(&out.stdout).unwrap(),
    )
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_owned()
}

const SPEC: &str = "g2.cliques = 4\ng1.cliques = 3\ncross = 0.0-0.0 0.1-0.1\n";

#[test]
fn gen_spec_matches_library_build() {
    let dir = tempfile::tempdir().unwrap();
    let spec = path(dir.path(), "g.spec");
    std::fs::write(&spec, SPEC).unwrap();
    let out = path(dir.path(), "out");
    let (code, report) = json(&["gen", "--spec", &spec, "--out", &out]);
    assert_eq!(code, 0);
    assert_eq!(report["command"], "gen");
    assert_eq!(
        report["result"]["files"],
        serde_json::json!(["graph.edges", "partition.v2"])
    );

    let lg = parse_edge_list(&std::fs::read_to_string(dir.path().join("out/graph.edges")).unwrap())
        .unwrap();
    let v2 = parse_vertex_list(
        &std::fs::read_to_string(dir.path().join("out/partition.v2")).unwrap(),
        &lg,
    )
    .unwrap();
    let (g, p) = build_gadget(&SPEC.parse::<GadgetSpec>().unwrap()).unwrap();
    assert_eq!(lg.graph, g);
    assert_eq!(make_partition(&lg.graph, v2).unwrap().v2(), p.v2());
}

#[test]
fn labels_survive_sparse_ids() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "g.edges");
    let v2 = path(dir.path(), "g.v2");
    std::fs::write(&g, "# triangle on sparse ids\n10 20\n20 30\n10 30\n30 40\n").unwrap();
    std::fs::write(&v2, "10 20 30\n").unwrap();
    let (code, report) = json(&["connectivity", &g]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["kprime"], 1);
    assert_eq!(
        report["result"]["witness"]["crossing_edges"],
        serde_json::json!([[30, 40]])
    );
    let (code, report) = json(&["profile", &g, &v2]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["boundary1"], serde_json::json!([40]));
    assert_eq!(report["result"]["phi"], 1);
}

#[test]
fn report_records_input_digest() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "g.edges");
    std::fs::write(&g, "0 1\n").unwrap();
    let (_, a) = json(&["connectivity", &g]);
    std::fs::write(&g, "0 1\n1 2\n").unwrap();
    let (_, b) = json(&["connectivity", &g]);
    let digest = |r: &Value| r["inputs"]["graph"].as_str().unwrap().to_owned();
    assert!(digest(&a)
        .strip_prefix("sha256:")
        .is_some_and(|h| h.len() == 64));
    assert_ne!(digest(&a), digest(&b));
}

#[test]
fn errors_go_to_stderr() {
    let out = run(&["connectivity", "/nonexistent/graph.edges"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn verify_theorem_include_inapplicable_lists_every_cut() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "g.edges");
    let v2 = path(dir.path(), "g.v2");
    std::fs::write(&g, "0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n3 0\n").unwrap();
    std::fs::write(&v2, "0 1 2\n").unwrap();
    let (code, default) = json(&["verify-theorem", &g, &v2, "--all-cuts"]);
    assert_eq!(code, 0);
    assert_eq!(default["result"]["reports"].as_array().unwrap().len(), 1);
    let (_, all) = json(&[
        "verify-theorem",
        &g,
        &v2,
        "--all-cuts",
        "--include-inapplicable",
    ]);
    assert_eq!(all["result"]["reports"].as_array().unwrap().len(), 7);
    assert_eq!(all["result"]["summary"]["cuts_checked"], 7);
}
