use hypca_engine::{Injection, Trace};

use crate::{
    build_active_memory, build_crossing, build_fixed_switch, build_flipflop, build_memory_switch, build_passive_memory,
    build_roundabout, CircuitError, CircuitTemplate, Leg, Scenario,
};

/// Names of the traced scenarios, in catalog order.
pub const SCENARIO_NAMES: [&str; 7] = ["crossing", "fixed", "flipflop", "mma-c", "mma-b", "mmpX", "mmpY"];

const EXPECTED: [(&str, &str); 7] = [
    ("crossing", include_str!("../../../traces/crossing.csv")),
    ("fixed", include_str!("../../../traces/fixed.csv")),
    ("flipflop", include_str!("../../../traces/flipflop.csv")),
    ("mma-c", include_str!("../../../traces/mma-c.csv")),
    ("mma-b", include_str!("../../../traces/mma-b.csv")),
    ("mmpX", include_str!("../../../traces/mmpX.csv")),
    ("mmpY", include_str!("../../../traces/mmpY.csv")),
];

fn canonical_name(name: &str) -> Option<&'static str> {
    let lower = name.to_ascii_lowercase();
    let lower = match lower.as_str() {
        "tr_basc" | "flip-flop" => "flipflop",
        "mma" => "mma-c",
        other => other,
    };
    SCENARIO_NAMES.into_iter().find(|n| n.to_ascii_lowercase() == lower)
}

fn inject(list: &[(usize, &str)]) -> Vec<Injection> {
    list.iter().map(|&(time, cell)| Injection { time, cell: cell.to_string(), count: 1 }).collect()
}

fn scenario(
    name: &str,
    template: CircuitTemplate,
    injections: &[(usize, &str)],
    steps: usize,
    watch: &str,
) -> Scenario {
    let expected =
        EXPECTED.iter().find(|(n, _)| *n == name).map(|(_, csv)| Trace::from_csv(csv).expect("shipped trace parses"));
    Scenario {
        name: name.to_string(),
        template: CircuitTemplate { name: name.to_string(), ..template },
        injections: inject(injections),
        steps,
        watch: watch.split(',').map(str::to_string).collect(),
        expect: expected.as_ref().map(|_| format!("traces/{name}.csv")),
        expected,
    }
}

const ACTIVE_WATCH: &str = "bA,A,O,B,aB,C,aC,D,H,K";
const PASSIVE_WATCH: &str = "aV,V,O,X,bX,Y,bY,Z,I,J,D,H,K,Z1,M,D1";

/// A traced scenario at p (13 or >= 17); aliases `tr_basc` (flip-flop) and
/// `mma` (active memory towards C) are accepted, case-insensitively.
pub fn catalog_scenario(name: &str, p: usize) -> Result<Scenario, CircuitError> {
    let name = canonical_name(name).ok_or_else(|| CircuitError::UnknownScenario(name.to_string()))?;
    let s = match name {
        "crossing" => scenario(name, build_crossing(13)?, &[(2, "trE")], 18, "A,B,C,D,E,F,F1,BF,BC,CE"),
        "fixed" => scenario(name, build_fixed_switch(13)?, &[(2, "bB"), (9, "bC")], 14, "aA,A,O,B,bB,C,bC"),
        "flipflop" => scenario(name, build_flipflop(13, Leg::C)?, &[(3, "bA"), (11, "bA")], 16, ACTIVE_WATCH),
        "mma-c" => scenario(name, build_active_memory(13, Leg::C)?, &[(3, "bA")], 8, ACTIVE_WATCH),
        "mma-b" => scenario(name, build_active_memory(13, Leg::B)?, &[(3, "bA")], 8, ACTIVE_WATCH),
        "mmpX" => scenario(name, build_passive_memory(13, Leg::C)?, &[(3, "bX"), (18, "bX")], 23, PASSIVE_WATCH),
        _ => scenario(name, build_passive_memory(13, Leg::B)?, &[(2, "bY"), (17, "bY")], 23, PASSIVE_WATCH),
    };
    s.lift(p)
}

/// The traced p = 13 scenarios with their expected traces.
pub fn scenario_catalog() -> Vec<Scenario> {
    SCENARIO_NAMES.iter().map(|n| catalog_scenario(n, 13).expect("catalog builds")).collect()
}

/// Round-about run with a particle entering at branching `entry`.
pub fn roundabout_scenario(p: usize, branch_count: usize, entry: usize) -> Result<Scenario, CircuitError> {
    let t = build_roundabout(p, branch_count)?;
    let port = format!("trE{entry}");
    if !t.entries.contains(&port) {
        return Err(CircuitError::UnknownRole(port));
    }
    let mut watch = Vec::new();
    for i in 0..branch_count {
        for c in ["E", "C", "D", "A", "B", "F", "F1", "F2", "BF", "BC", "CE"] {
            watch.push(format!("{c}{i}"));
        }
    }
    let name = format!("roundabout-{entry}");
    Ok(Scenario {
        template: CircuitTemplate { name: name.clone(), ..t },
        name,
        injections: vec![Injection { time: 2, cell: port, count: 1 }],
        steps: 8 * branch_count,
        watch,
        expect: None,
        expected: None,
    })
}

/// Complete memory switch: a passage through the passive switch from `port`
/// (`bX` or `bY`) at time 2, then an active passage from bA at time 26.
pub fn memory_scenario(p: usize, selected: Leg, port: &str) -> Result<Scenario, CircuitError> {
    let t = build_memory_switch(p, selected)?;
    if port != "bX" && port != "bY" {
        return Err(CircuitError::UnknownRole(port.to_string()));
    }
    let watch = "bX,bY,X,Y,T,V,aV,Z,I,J,Z1,M,D1,D,H,K,bA,A,O,B,aB,C,aC";
    let name = format!("memory-{port}");
    Ok(Scenario {
        template: CircuitTemplate { name: name.clone(), ..t },
        name,
        injections: inject(&[(2, port), (26, "bA")]),
        steps: 40,
        watch: watch.split(',').map(str::to_string).collect(),
        expect: None,
        expected: None,
    })
}
