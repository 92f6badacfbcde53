use std::path::PathBuf;

use hypca_circuits::*;
use hypca_engine::Trace;
use hypca_genrules::shipped_p13;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

#[test]
fn shipped_scenario_files_match_the_catalog() {
    for s in scenario_catalog() {
        let text = std::fs::read_to_string(root().join(format!("scenarios/{}.scn", s.name))).unwrap();
        let parsed = parse_scenario(&s.name, &text).unwrap();
        assert_eq!(parsed.template, s.template);
        assert_eq!(parsed.injections, s.injections);
        assert_eq!(parsed.watch, s.watch);
        assert_eq!(parsed.steps, s.steps);
        let path = root().join(parsed.expect.as_deref().unwrap());
        let expected = Trace::from_csv(&std::fs::read_to_string(path).unwrap()).unwrap();
        assert_eq!(parsed.run(&shipped_p13()).unwrap(), expected);
    }
}

#[test]
fn emit_then_parse_is_identity() {
    for p in [13, 17] {
        for name in SCENARIO_NAMES {
            let s = catalog_scenario(name, p).unwrap();
            let back = parse_scenario(name, &emit_scenario(&s)).unwrap();
            assert_eq!(emit_scenario(&back), emit_scenario(&s));
            assert_eq!(back.template, s.template);
        }
    }
    let rb = roundabout_scenario(13, 3, 1).unwrap();
    assert_eq!(parse_scenario(&rb.name, &emit_scenario(&rb)).unwrap().template, rb.template);
}

const SMALL: &str = "p=13
cell a state=W nbrs=B,B,W,B,@b,B,W,W,W,W,W,W,W
cell b state=W nbrs=B,B,@a,B,W,B,W,W,W,W,W,W,W
inject t=1 port=a n=1
watch a,b
steps 3
";

#[test]
fn small_file_parses_and_defaults_entries() {
    let s = parse_scenario("small", SMALL).unwrap();
    assert_eq!(s.template.entries, vec!["a"]);
    assert_eq!(s.steps, 3);
    assert!(s.expect.is_none());
}

fn err(text: &str) -> CircuitError {
    parse_scenario("bad", text).unwrap_err()
}

#[test]
fn syntax_errors_carry_the_line() {
    assert!(matches!(err("cell a state=W nbrs=W\n"), CircuitError::SyntaxError { line: 1, .. }));
    let text = SMALL.replace("steps 3", "steps three");
    assert!(matches!(err(&text), CircuitError::SyntaxError { line: 6, .. }));
    let text = SMALL.replace("state=W nbrs=B,B,@a", "state=Q nbrs=B,B,@a");
    assert!(matches!(err(&text), CircuitError::SyntaxError { line: 3, .. }));
    let text = SMALL.replace("n=1", "n=3");
    assert!(matches!(err(&text), CircuitError::SyntaxError { line: 4, .. }));
    let text = SMALL.replace("nbrs=B,B,W,B,@b,B,W,W,W,W,W,W,W", "nbrs=B,B,W,B,@b");
    assert!(matches!(err(&text), CircuitError::SyntaxError { line: 2, .. }));
    assert!(matches!(err(&SMALL.replace("steps 3\n", "")), CircuitError::SyntaxError { .. }));
    assert!(matches!(err(&format!("{SMALL}frobnicate\n")), CircuitError::SyntaxError { line: 7, .. }));
}

#[test]
fn unknown_names_are_reported() {
    assert!(matches!(err(&SMALL.replace("port=a", "port=zz")), CircuitError::UnknownRole(n) if n == "zz"));
    assert!(matches!(err(&SMALL.replace("watch a,b", "watch a,q")), CircuitError::UnknownRole(n) if n == "q"));
    let dangling = SMALL.replace("@b,B", "@c,B");
    assert!(matches!(err(&dangling), CircuitError::DanglingRef { cell, target } if cell == "a" && target == "c"));
}

#[test]
fn one_sided_references_need_a_stub() {
    let text = SMALL.replace("nbrs=B,B,@a,B", "nbrs=B,B,W,B");
    assert!(matches!(err(&text), CircuitError::Engine(_)));
    let stubbed = text.replace("inject", "stub a b\ninject");
    parse_scenario("stubbed", &stubbed).unwrap();
}

#[test]
fn three_cell_track_file_runs() {
    let tpl = build_track(13, 3, TrackShape::Straight, Direction::Forward).unwrap();
    let mut text = String::from("p=13\n");
    for c in &tpl.cells {
        let slots: Vec<String> = c
            .slots
            .iter()
            .map(|s| match s {
                hypca_engine::SlotSpec::Env(st) => st.to_string(),
                hypca_engine::SlotSpec::Ref(n) => format!("@{n}"),
            })
            .collect();
        text.push_str(&format!("cell {} state={} nbrs={}\n", c.name, c.state, slots.join(",")));
    }
    let names: Vec<&str> = tpl.cells.iter().map(|c| c.name.as_str()).collect();
    text.push_str(&format!("inject t=1 port={} n=1\nwatch {}\nsteps 3\n", names[0], names.join(",")));
    let s = parse_scenario("track3", &text).unwrap();
    let trace = s.run(&shipped_p13()).unwrap();
    for (t, row) in trace.rows.iter().enumerate() {
        let black: Vec<usize> = (0..row.len()).filter(|&i| row[i].is_black()).collect();
        assert_eq!(black, vec![t]);
    }
}

#[test]
fn injection_ports_are_declared_entries() {
    let mut all = scenario_catalog();
    all.push(roundabout_scenario(13, 4, 2).unwrap());
    for sel in [Leg::B, Leg::C] {
        all.push(memory_scenario(17, sel, "bY").unwrap());
    }
    for s in all {
        for inj in &s.injections {
            assert!(s.template.entries.contains(&inj.cell), "{}: {} is not an entry", s.name, inj.cell);
        }
    }
}
