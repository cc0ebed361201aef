use std::fs;
use std::process::{Command, Output};

fn cycgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cycgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_json_reports_three_colors() {
    let o = cycgraph(&["classify", "--p", "3", "--orbits", "3,3", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], "GR3Star");
    assert_eq!(v["colors_used"], 3);
    assert_eq!(v["verified"]["exact"], true);
}

#[test]
fn classify_not_in_gr_carries_a_certificate() {
    let o = cycgraph(&["classify", "--p", "5", "--orbits", "5", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], "NotInGR");
    assert_eq!(v["certificate"], "(1 4)(2 3)");
}

#[test]
fn classify_writes_evidence_files() {
    let dir = tempfile::tempdir().unwrap();
    let ev = dir.path().join("ev");
    let o = cycgraph(&["classify", "--p", "3", "--orbits", "3,3", "--evidence", ev.to_str().unwrap()]);
    assert!(o.status.success());
    for f in ["verdict.json", "witness.json", "witness.dot", "non_gr2.json"] {
        assert!(ev.join(f).exists(), "missing {f}");
    }
}

#[test]
fn construct_verify_then_aut_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    let dot = dir.path().join("g.dot");
    let o = cycgraph(&[
        "construct", "--p", "3", "--orbits", "3,3", "--out", out.to_str().unwrap(),
        "--dot", dot.to_str().unwrap(), "--verify",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&out).unwrap();
    let g: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(g["n"], 6);
    assert_eq!(g["k"], 3);
    assert!(fs::read_to_string(&dot).unwrap().contains("graph"));

    let a = cycgraph(&["aut", out.to_str().unwrap()]);
    assert!(a.status.success());
    assert!(stdout(&a).starts_with("order 3\n"));
    let b = cycgraph(&["aut", "--brute", out.to_str().unwrap()]);
    assert!(stdout(&b).starts_with("order 3\n"));

    let parsed = cycgraph::ColoredGraph::from_json(&text).unwrap();
    assert_eq!(parsed.to_json(), text);
}

#[test]
fn aut_of_complete_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.json");
    fs::write(&path, cycgraph::ColoredGraph::monochromatic(4).to_json()).unwrap();
    let o = cycgraph(&["aut", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("order 24\n"));
}

#[test]
fn brute_force_respects_cap() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k9.json");
    fs::write(&path, cycgraph::ColoredGraph::monochromatic(9).to_json()).unwrap();
    let o = cycgraph(&["aut", "--brute", "--brute-cap", "8", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn closure_of_single_orbit() {
    let o = cycgraph(&["closure", "--p", "3", "--orbits", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("closure order 6, not 2*-closed"));
}

#[test]
fn oracle_finds_three_colors() {
    let o = cycgraph(&["oracle", "--p", "3", "--orbits", "3,3", "--sequential"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["min_colors"], 3);
}

#[test]
fn oracle_is_deterministic_across_modes() {
    let args = ["oracle", "--p", "2", "--orbits", "4,4", "--k", "2"];
    let par = cycgraph(&args);
    let mut seq_args = args.to_vec();
    seq_args.push("--sequential");
    let seq = cycgraph(&seq_args);
    assert_eq!(stdout(&par), stdout(&seq));
}

#[test]
fn bad_specs_and_arguments_exit_with_two() {
    assert_eq!(cycgraph(&["classify", "--p", "4", "--orbits", "4"]).status.code(), Some(2));
    assert_eq!(cycgraph(&["classify", "--p", "3", "--orbits", "6"]).status.code(), Some(2));
    assert_eq!(cycgraph(&["oracle", "--p", "3", "--orbits", "3", "--k", "0"]).status.code(), Some(2));
    assert_eq!(cycgraph(&["classify", "--bogus"]).status.code(), Some(2));
}

#[test]
fn verify_all_passes() {
    let o = cycgraph(&["verify-all", "--sequential"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains(" 0 failed"));
}
