use std::path::PathBuf;
use std::process::{Command, Output};

use hypca_circuits::catalog_scenario;
use hypca_engine::EngineError;
use hypca_engine::{embed_region, run_sparse};
use hypca_genrules::shipped_p13;
use hypca_rulecore::parse_rules;
use hypca_tiling::build_ball;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn hypca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypca")).args(args).current_dir(root()).env_remove("HYPCA_RULES").output().unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

#[test]
fn validate_reports_on_stderr_only() {
    let ok = hypca(&["validate", "rules/p13.rules"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(ok.stdout.is_empty());
    assert!(text(&ok.stderr).contains("177 rules"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.rules");
    std::fs::write(&bad, "p=7\nW BBBWWWW -> B\nW WBBBWWW -> W\n").unwrap();
    let out = hypca(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out.stderr).to_lowercase().contains("conflict"), "{}", text(&out.stderr));

    assert_eq!(hypca(&["validate", "no/such/file"]).status.code(), Some(2));
}

#[test]
fn run_reproduces_the_crossing_trace() {
    let out =
        hypca(&["run", "--scenario", "crossing", "--rules", "rules/p13.rules", "--expect", "traces/crossing.csv"]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let shipped = std::fs::read_to_string(root().join("traces/crossing.csv")).unwrap();
    assert_eq!(text(&out.stdout), shipped);
}

#[test]
fn run_flags_a_mismatch_and_writes_the_trace_file() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.csv");
    let out = hypca(&[
        "run",
        "--scenario",
        "fixed",
        "--steps",
        "10",
        "--trace",
        trace.to_str().unwrap(),
        "--expect",
        "traces/fixed.csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(text(&out.stderr).contains("expected"));
    assert_eq!(std::fs::read_to_string(&trace).unwrap().lines().count(), 11);
}

#[test]
fn scenario_files_and_environment_rules() {
    let status = Command::new(env!("CARGO_BIN_EXE_hypca"))
        .args(["run", "--scenario", "scenarios/mmpX.scn", "--expect", "traces/mmpX.csv"])
        .current_dir(root())
        .env("HYPCA_RULES", "rules/p13.rules")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0), "{}", text(&status.stderr));
    assert_eq!(hypca(&["run", "--scenario", "nowhere"]).status.code(), Some(2));
}

#[test]
fn missing_rule_is_a_domain_failure() {
    // drop the first rule line the fixed-switch run cannot do without
    let rules = std::fs::read_to_string(root().join("rules/p13.rules")).unwrap();
    let s = catalog_scenario("fixed", 13).unwrap();
    let lines: Vec<&str> = rules.lines().collect();
    let cut_text = (0..lines.len())
        .filter(|&i| lines[i].contains("->"))
        .map(|i| [&lines[..i], &lines[i + 1..]].concat().join("\n"))
        .find(|text| s.run(&parse_rules(text).unwrap()).is_err())
        .expect("some rule is needed");
    let dir = tempfile::tempdir().unwrap();
    let cut = dir.path().join("cut.rules");
    std::fs::write(&cut, cut_text).unwrap();
    assert_eq!(hypca(&["validate", cut.to_str().unwrap()]).status.code(), Some(0));
    let out = hypca(&["run", "--scenario", "fixed", "--rules", cut.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(text(&out.stderr).contains("no rule"), "{}", text(&out.stderr));
}

#[test]
fn trace_diff_of_identical_files_is_silent() {
    let out = hypca(&["trace-diff", "traces/flipflop.csv", "traces/flipflop.csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty() && out.stderr.is_empty());
    let dir = tempfile::tempdir().unwrap();
    let other = dir.path().join("o.csv");
    let changed = std::fs::read_to_string(root().join("traces/flipflop.csv")).unwrap().replacen("\n2,W", "\n2,B", 1);
    std::fs::write(&other, changed).unwrap();
    let out = hypca(&["trace-diff", "traces/flipflop.csv", other.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(text(&out.stdout).trim(), "t=2 bA: expected B, got W");
}

#[test]
fn neighbors_of_the_central_tile() {
    let out = hypca(&["neighbors", "--p", "7", "--cell", "C"]);
    assert_eq!(text(&out.stdout).trim(), "s1.1 s2.1 s3.1 s4.1 s5.1 s6.1 s7.1");
    assert_eq!(hypca(&["neighbors", "--p", "7", "--cell", "zz"]).status.code(), Some(2));
}

#[test]
fn generate_writes_a_valid_rule_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p19.rules");
    let out = hypca(&["generate", "--p", "19", "-o", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    assert!(out.stdout.is_empty());
    assert_eq!(hypca(&["validate", file.to_str().unwrap()]).status.code(), Some(0));
    let tracks = hypca(&["generate", "--p", "17", "--family", "tracks"]);
    assert!(text(&tracks.stdout).starts_with("p=17\n"));
    assert_eq!(hypca(&["generate", "--p", "15"]).status.code(), Some(2));
    assert_eq!(hypca(&["generate"]).status.code(), Some(2));
}

#[test]
fn render_writes_well_formed_svg() {
    let out = hypca(&["render", "--p", "7", "--radius", "2"]);
    assert_eq!(out.status.code(), Some(0));
    roxmltree::Document::parse(&text(&out.stdout)).unwrap();
    let crossing = hypca(&["render", "--p", "13", "--radius", "3", "--scenario", "crossing"]);
    assert_eq!(crossing.status.code(), Some(1));
    assert!(crossing.stdout.is_empty());
}

#[test]
fn embedded_fixed_switch_needs_rules_for_untracked_tiles() {
    // The fixed switch fits in a radius-4 ball, but once the particle is in
    // the port an untracked white tile sees three black neighbours, a
    // situation the p = 13 table (written for tracked cells only) leaves open.
    let s = catalog_scenario("fixed", 13).unwrap();
    let table = shipped_p13();
    let ball = build_ball(13, 4).unwrap();
    let e = embed_region(&s.template.region().unwrap(), &ball).unwrap();
    let watch: Vec<&str> = s.watch.iter().map(String::as_str).collect();
    let idle = run_sparse(&e.config, &table, &ball, 6, &e.names, &watch, &[]).unwrap();
    assert_eq!(idle, hypca_engine::run(&s.template.region().unwrap(), &table, 6, &watch).unwrap());
    match run_sparse(&e.config, &table, &ball, s.steps, &e.names, &watch, &s.injections) {
        Err(EngineError::MissingRule { cell, .. }) => {
            assert!(!e.names.values().any(|c| c.label(13) == cell), "{cell} is tracked");
        }
        other => panic!("expected a missing rule on an untracked tile, got {other:?}"),
    }
}
