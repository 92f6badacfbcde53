use std::collections::BTreeMap;

use hypca_engine::*;
use hypca_rulecore::{Rule, RuleTable, State};
use hypca_tiling::{build_ball, CellCoord, TilingBall};
use rand::{Rng, SeedableRng};

use State::{B, W};

fn env(s: State) -> SlotSpec {
    SlotSpec::Env(s)
}

fn r(name: &str) -> SlotSpec {
    SlotSpec::Ref(name.to_string())
}

/// A rule depending only on the state and the number of black neighbours.
fn totalistic(p: usize, f: impl Fn(State, usize) -> State) -> RuleTable {
    let mut table = RuleTable::new(p);
    for bits in 0u32..(1 << p) {
        let ctx: Vec<State> = (0..p).map(|i| if bits >> i & 1 == 1 { B } else { W }).collect();
        let n = bits.count_ones() as usize;
        for s in [W, B] {
            table.insert_rule(Rule::new(s, ctx.clone(), f(s, n)), "test").unwrap();
        }
    }
    table
}

/// Three cells in a row on p=7, the middle one between the two ends.
fn line_region(states: [State; 3]) -> TrackedRegion {
    let mut b = RegionBuilder::new(7);
    b.cell("a", states[0], vec![r("m"), env(W), env(W), env(W), env(W), env(W), env(W)]);
    b.cell("m", states[1], vec![r("a"), env(W), env(W), r("z"), env(W), env(W), env(W)]);
    b.cell("z", states[2], vec![r("m"), env(B), env(W), env(W), env(W), env(W), env(W)]);
    b.build().unwrap()
}

#[test]
fn quiescent_region_stays_white() {
    let table = RuleTable::new(7);
    let region = line_region([W, W, W]);
    let next = step(&region, &table).unwrap();
    assert_eq!(next.states(), &[W, W, W]);
    assert_eq!(next.time(), 2);
}

#[test]
fn builder_errors() {
    let mut b = RegionBuilder::new(7);
    b.cell("a", W, vec![r("nope"), env(W), env(W), env(W), env(W), env(W), env(W)]);
    assert_eq!(b.build().unwrap_err(), EngineError::DanglingRef { cell: "a".into(), target: "nope".into() });

    let mut b = RegionBuilder::new(7);
    b.cell("a", W, vec![r("b"), env(W), env(W), env(W), env(W), env(W), env(W)]);
    b.cell("b", W, vec![env(W); 7]);
    assert_eq!(b.build().unwrap_err(), EngineError::Asymmetric { from: "a".into(), to: "b".into() });
    b.stub("a", "b");
    assert!(b.build().is_ok());

    let mut b = RegionBuilder::new(7);
    b.cell("a", W, vec![env(W); 6]);
    assert!(matches!(b.build(), Err(EngineError::WrongArity { found: 6, .. })));

    let mut b = RegionBuilder::new(7);
    b.cell("a", W, vec![env(W); 7]).cell("a", B, vec![env(W); 7]);
    assert_eq!(b.build().unwrap_err(), EngineError::DuplicateCell("a".into()));
}

#[test]
fn single_step_run_is_the_initial_row() {
    let table = RuleTable::new(7);
    let region = line_region([B, W, W]);
    let trace = run(&region, &table, 1, &["a", "m", "z"]).unwrap();
    assert_eq!(trace.rows, vec![vec![B, W, W]]);
}

#[test]
fn injection_happens_before_recording() {
    let table = totalistic(7, |s, _| s);
    let region = line_region([W, W, W]);
    let inj = [Injection { time: 2, cell: "a".into(), count: 1 }];
    let trace = run_with(&region, &table, 3, &["a"], &inj).unwrap();
    assert_eq!(trace.column("a").unwrap(), vec![W, B, B]);
}

#[test]
fn synchronous_update() {
    // a cell turns black iff exactly one neighbour is black; all three
    // read the pre-step states
    let table = totalistic(7, |s, n| if n == 1 { B } else { s });
    let region = line_region([B, W, W]);
    let trace = run(&region, &table, 3, &["a", "m", "z"]).unwrap();
    assert_eq!(trace.rows[1], vec![B, B, B]);
}

#[test]
fn cell_order_does_not_matter() {
    let table = totalistic(7, |s, n| if n % 2 == 1 { s.flipped() } else { s });
    let fwd = line_region([B, W, B]);
    let mut b = RegionBuilder::new(7);
    b.cell("z", B, vec![r("m"), env(B), env(W), env(W), env(W), env(W), env(W)]);
    b.cell("m", W, vec![r("a"), env(W), env(W), r("z"), env(W), env(W), env(W)]);
    b.cell("a", B, vec![r("m"), env(W), env(W), env(W), env(W), env(W), env(W)]);
    let rev = b.build().unwrap();
    let w = ["a", "m", "z"];
    assert_eq!(run(&fwd, &table, 6, &w).unwrap(), run(&rev, &table, 6, &w).unwrap());
}

#[test]
fn runs_are_deterministic() {
    let table = totalistic(7, |s, n| if n == 1 || n == 2 { s.flipped() } else { s });
    let region = line_region([B, W, B]);
    assert_eq!(run(&region, &table, 10, &["m"]).unwrap(), run(&region, &table, 10, &["m"]).unwrap());
}

#[test]
fn missing_rule_names_cell_and_time() {
    let table = RuleTable::new(7);
    let mut b = RegionBuilder::new(7);
    b.cell("x", W, vec![env(B), env(B), env(B), env(W), env(W), env(W), env(W)]);
    let region = b.build().unwrap();
    let err = run(&region, &table, 2, &["x"]).unwrap_err();
    assert!(matches!(err, EngineError::MissingRule { ref cell, time: 1, .. } if cell == "x"), "{err}");
}

#[test]
fn unknown_watch_name() {
    let region = line_region([W, W, W]);
    assert_eq!(run(&region, &RuleTable::new(7), 2, &["q"]).unwrap_err(), EngineError::UnknownCell("q".into()));
}

#[test]
fn trace_csv_round_trip() {
    let mut t = Trace::new(vec!["A".into(), "BF".into()]);
    t.push(vec![W, B]);
    t.push(vec![B, B]);
    let csv = t.to_csv();
    assert_eq!(csv, "t,A,BF\n1,W,B\n2,B,B\n");
    assert_eq!(Trace::from_csv(&csv).unwrap(), t);
    assert_eq!(t.get(2, "A"), Some(B));
    assert_eq!(t.get(3, "A"), None);
}

#[test]
fn trace_csv_errors() {
    assert!(matches!(Trace::from_csv("x,A\n1,W\n"), Err(EngineError::BadTrace { line: 1, .. })));
    assert!(matches!(Trace::from_csv("t,A\n1,Q\n"), Err(EngineError::BadTrace { line: 2, .. })));
    assert!(matches!(Trace::from_csv("t,A\n2,W\n"), Err(EngineError::BadTrace { line: 2, .. })));
    assert!(matches!(Trace::from_csv("t,A\n1,W,W\n"), Err(EngineError::BadTrace { line: 2, .. })));
}

#[test]
fn trace_diff_reports() {
    let mut a = Trace::new(vec!["A".into(), "B".into()]);
    a.push(vec![W, W]);
    a.push(vec![B, W]);
    assert!(trace_diff(&a, &a).unwrap().is_empty());
    let mut b = a.clone();
    b.rows[1][1] = B;
    let d = trace_diff(&a, &b).unwrap();
    assert_eq!(d, vec![DiffEntry { time: 2, cell: "B".into(), expected: Some(B), actual: Some(W) }]);
    assert_eq!(d[0].to_string(), "t=2 B: expected B, got W");
    let mut short = a.clone();
    short.rows.pop();
    assert_eq!(trace_diff(&short, &a).unwrap().len(), 2);
    let other = Trace::new(vec!["A".into()]);
    assert!(matches!(trace_diff(&a, &other), Err(EngineError::ColumnMismatch { .. })));
}

#[test]
fn sparse_empty_stays_empty() {
    let ball = build_ball(7, 3).unwrap();
    let table = RuleTable::new(7);
    assert!(step_sparse(&SparseConfig::new(), &table, &ball).unwrap().is_empty());
}

#[test]
fn sparse_isolated_black_is_conserved() {
    let ball = build_ball(7, 3).unwrap();
    let table = RuleTable::new(7);
    let config: SparseConfig = [(CellCoord::root(2), B)].into();
    assert_eq!(step_sparse(&config, &table, &ball).unwrap(), config);
}

#[test]
fn sparse_support_escape() {
    let ball = build_ball(7, 2).unwrap();
    let table = RuleTable::new(7);
    let frontier = ball.ids().find(|&id| ball.ring(id) == 2).unwrap();
    let config: SparseConfig = [(ball.coord(frontier).clone(), B)].into();
    assert!(matches!(step_sparse(&config, &table, &ball), Err(EngineError::SupportEscape(_))));
    // growth reaching the frontier
    let grow = totalistic(7, |s, n| if n >= 1 { B } else { s });
    let config: SparseConfig = [(CellCoord::root(1), B)].into();
    assert!(matches!(step_sparse(&config, &grow, &ball), Err(EngineError::SupportEscape(_))));
}

fn random_config(ball: &TilingBall, max_ring: usize, rng: &mut impl Rng) -> SparseConfig {
    ball.ids()
        .filter(|&id| ball.ring(id) <= max_ring && rng.gen_bool(0.4))
        .map(|id| (ball.coord(id).clone(), B))
        .collect()
}

#[test]
fn sparse_matches_extracted_region() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let ball = build_ball(7, 5).unwrap();
    let table = totalistic(7, |s, n| match (s, n) {
        (W, 2) => B,
        (B, 0) | (B, 4..) => W,
        _ => s,
    });
    let interior: Vec<usize> = ball.ids().filter(|&id| ball.is_interior(id)).collect();
    for _ in 0..20 {
        let config = random_config(&ball, 1, &mut rng);
        let region = region_from_ball(&ball, &config, &interior).unwrap();
        let names: BTreeMap<String, CellCoord> =
            interior.iter().map(|&id| (ball.coord(id).label(7), ball.coord(id).clone())).collect();
        let watch: Vec<&str> = names.keys().map(String::as_str).collect();
        let tracked = run(&region, &table, 4, &watch).unwrap();
        let sparse = run_sparse(&config, &table, &ball, 4, &names, &watch, &[]).unwrap();
        assert!(trace_diff(&sparse, &tracked).unwrap().is_empty());
    }
}

#[test]
fn extracted_region_embeds_back() {
    let ball = build_ball(13, 3).unwrap();
    let centre = ball.id_of(&CellCoord::central()).unwrap();
    let mut ids = vec![centre];
    ids.extend(ball.neighbors(centre).iter().flatten().take(4));
    let config: SparseConfig = [(CellCoord::root(2), B), (CellCoord::root(9), B)].into();
    let region = region_from_ball(&ball, &config, &ids).unwrap();
    let emb = embed_region(&region, &ball).unwrap();
    assert_eq!(emb.tiles.len(), 5);
    // frozen black slot and the black tracked cell are both in the config
    assert_eq!(emb.config.len(), 2);
    let table = RuleTable::new(13);
    let watch: Vec<&str> = region.cells().iter().map(|c| c.name.as_str()).collect();
    let a = run(&region, &table, 3, &watch).unwrap();
    let b = run_sparse(&emb.config, &table, &ball, 3, &emb.names, &watch, &[]).unwrap();
    assert_eq!(a, b);
}

#[test]
fn impossible_region_is_reported() {
    // b sits on two different sides of a
    let mut blr = RegionBuilder::new(7);
    blr.cell("a", W, vec![r("b"), r("b"), env(W), env(W), env(W), env(W), env(W)]);
    blr.cell("b", W, vec![r("a"), env(W), env(W), env(W), env(W), env(W), env(W)]);
    let region = blr.build().unwrap();
    let ball = build_ball(7, 3).unwrap();
    assert!(matches!(embed_region(&region, &ball), Err(EngineError::NotEmbeddable(_))));
}
