use std::path::PathBuf;
use std::process::Command;

use autotower::Report;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_autotower"))
        .args(args)
        .arg("--fixtures-dir")
        .arg(fixtures())
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn tau_sym3_json_round_trips() {
    let (code, stdout, _) = run(&["tau", "sym 3", "--json"]);
    assert_eq!(code, 0);
    let r: Report = serde_json::from_str(&stdout).unwrap();
    assert_eq!(r.results["tau"], 0);
    assert_eq!(r.digest, r.compute_digest());
    assert!(r.checks.iter().any(|c| c.name == "matches recorded fixture" && c.passed));
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", stdout);
}

#[test]
fn verify_wreath_2() {
    let (code, stdout, _) = run(&["verify", "wreath", "2", "--json"]);
    assert_eq!(code, 0);
    let r: Report = serde_json::from_str(&stdout).unwrap();
    assert!(r.passed);
    assert_eq!(r.height_or_tau, Some(3));
}

#[test]
fn verify_altexample_3_4() {
    assert_eq!(run(&["verify", "altexample", "3", "4"]).0, 0);
}

#[test]
fn exit_code_contract() {
    assert_eq!(run(&["tau", "sym 3", "--expect", "0"]).0, 0);
    assert_eq!(run(&["tau", "sym 3", "--expect", "2"]).0, 1);
    let (code, _, stderr) = run(&["tau", "alt 2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("offset 4"), "{}", stderr);
    assert_eq!(run(&["tau", "dihedral 4"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["tau", "alt 5", "--size-cap", "100"]).0, 3);
    assert_eq!(run(&["tau", "alt 5", "--step-cap", "0"]).0, 3);
    assert_eq!(run(&["realize", "sym 7"]).0, 3);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = run(&["verify", "psl", "2", "2", "2", "--json"]);
    let b = run(&["verify", "psl", "2", "2", "2", "--json"]);
    assert_eq!(a.0, 0);
    let strip = |s: &str| {
        let mut r: Report = serde_json::from_str(s).unwrap();
        r.wall_time_ms = 0;
        r.timings.clear();
        serde_json::to_string(&r).unwrap()
    };
    assert_eq!(strip(&a.1), strip(&b.1));
}

#[test]
fn realize_writes_edge_list_to_file() {
    let path = std::env::temp_dir().join(format!("autotower-{}.edges", std::process::id()));
    let (code, stdout, _) = run(&["realize", "sym 3", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let g = autotower::graph::Graph::parse_edge_list(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let aut = autotower::graph::graph_automorphisms(&g).unwrap();
    assert_eq!(aut.order(), 6);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn ntower_and_tower_commands() {
    let (code, stdout, _) = run(&["ntower", "subgroup (sym 4) gens [(0 1)]", "sym 4", "--json"]);
    assert_eq!(code, 0);
    let r: Report = serde_json::from_str(&stdout).unwrap();
    assert!(r.height_or_tau.is_some());
    let (code, stdout, _) = run(&["tower", "dihedral 5", "--json"]);
    assert_eq!(code, 0);
    let r: Report = serde_json::from_str(&stdout).unwrap();
    assert_eq!(r.suite, "tower");
    assert_eq!(r.per_level.len(), 2);
}
