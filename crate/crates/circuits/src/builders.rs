//! Circuit builders. Every template is wired cell by cell at p = 13 from
//! the idle configurations of the gadgets and widened with
//! [`CircuitTemplate::lift`] for p >= 17.

use crate::template::{cell, check_p, format_slots};
use crate::{CellSpec, CircuitError, CircuitTemplate};

/// Sense of a plain track. `Forward` cells see their successor on slot 3
/// and predecessor on slot 5; `Backward` cells use slots 13 and 11.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrackShape {
    Straight,
    /// Every third cell is a corner (two contiguous milestones).
    WithCorners,
}

/// Leg of a switch, named after its first cell. The selected leg is the one
/// an active passage takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Leg {
    B,
    C,
}

impl Leg {
    pub fn other(self) -> Leg {
        match self {
            Leg::B => Leg::C,
            Leg::C => Leg::B,
        }
    }
}

fn template(
    name: &str,
    cells: Vec<CellSpec>,
    stubs: &[(&str, &str)],
    entries: &[&str],
    exits: &[&str],
) -> CircuitTemplate {
    let owned = |v: &[&str]| v.iter().map(|s| s.to_string()).collect();
    CircuitTemplate {
        name: name.to_string(),
        p: 13,
        cells,
        stubs: stubs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        entries: owned(entries),
        exits: owned(exits),
    }
}

/// A one-way track of `length` cells `t0 .. t{length-1}`; the particle is
/// injected at `t0` and leaves after the last cell.
pub fn build_track(
    p: usize,
    length: usize,
    shape: TrackShape,
    direction: Direction,
) -> Result<CircuitTemplate, CircuitError> {
    check_p(p)?;
    if length < 3 {
        return Err(CircuitError::BadLayout { cell: "t0".into(), msg: "a track needs at least 3 cells".into() });
    }
    let name = |i: usize| format!("t{i}");
    let link = |i: Option<usize>| i.filter(|&i| i < length).map_or("W".to_string(), |i| format!("@{}", name(i)));
    let mut cells = Vec::new();
    for i in 0..length {
        let (prev, next) = (link(i.checked_sub(1)), link(Some(i + 1)));
        let corner = shape == TrackShape::WithCorners && i % 3 == 2;
        let (slots, kind) = match (direction, corner) {
            (Direction::Forward, false) => (format!("B,B,{next},B,{prev},B,W,W,W,W,W,W,W"), None),
            (Direction::Backward, false) => (format!("B,B,W,W,W,W,W,W,W,B,{prev},B,{next}"), None),
            (Direction::Forward, true) => (format!("B,B,{next},B,B,{prev},B,W,W,W,W,W,W"), Some("corner_a")),
            (Direction::Backward, true) => (format!("B,B,W,W,W,W,W,W,B,{prev},B,B,{next}"), Some("corner_b")),
        };
        cells.push(cell(&name(i), 'W', &slots, kind));
    }
    let last = name(length - 1);
    let t = template("track", cells, &[], &["t0"], &[last.as_str()]);
    t.lift(p)
}

// One branching of the round-about and its approach tracks: E arrives from
// outside (through trE), C and D carry the particle on the ring to A of the
// next branching, B meets the ring coming from the previous branching, and
// F, F1, F2 are the exit track. BF, BC and CE are the sensors.
const CROSSING: &[(&str, char, &str, Option<&str>)] = &[
    ("A", 'W', "B,B,@B,B,@D,B,W,W,W,W,W,W,W", None),
    ("B", 'W', "B,@A,B,W,W,W,W,B,B,@F,@BF,@BC,@C", Some("xB")),
    ("C", 'W', "B,@B,@BC,@E,@CE,W,W,W,W,B,B,B,@D", Some("xC")),
    ("D", 'W', "B,B,@A,B,@C,B,W,W,W,W,W,W,W", None),
    ("E", 'W', "@BC,B,W,W,W,W,W,W,W,B,@trE,@CE,@C", None),
    ("F", 'W', "B,B,@F1,@BF,@B,B,W,W,W,W,W,W,W", None),
    ("F1", 'W', "B,B,@F2,@BF,@F,B,W,W,W,W,W,W,W", None),
    ("F2", 'W', "B,B,W,@BF,@F1,B,W,W,W,W,W,W,W", None),
    ("BF", 'B', "@B,@F,@F1,@F2,B,B,B,B,W,B,B,W,@BC", Some("xBF")),
    ("BC", 'B', "@B,@BF,B,B,W,B,B,B,B,B,W,@E,@C", Some("xBC")),
    ("CE", 'B', "@C,@E,@trE,B,B,B,W,B,B,B,W,B,W", Some("xCE")),
    ("trE", 'W', "B,B,W,W,W,W,W,W,W,B,W,B,@E", None),
];

fn crossing_cells(suffix: &str, ring: impl Fn(&str, &str) -> Option<String>) -> Vec<CellSpec> {
    CROSSING
        .iter()
        .map(|&(name, state, slots, kind)| {
            let renamed: Vec<String> = slots
                .split(',')
                .map(|s| match s.strip_prefix('@') {
                    Some(t) => format!("@{}", ring(name, t).unwrap_or_else(|| format!("{t}{suffix}"))),
                    None => s.to_string(),
                })
                .collect();
            cell(&format!("{name}{suffix}"), state, &renamed.join(","), kind)
        })
        .collect()
}

/// The single-branching crossing used for the traced run: the ring closes
/// on itself (D feeds the A of the same branching).
pub fn build_crossing(p: usize) -> Result<CircuitTemplate, CircuitError> {
    check_p(p)?;
    let cells = crossing_cells("", |_, _| None);
    template("crossing", cells, &[("CE", "trE")], &["trE"], &["F2"]).lift(p)
}

/// Round-about with `branch_count` branchings `0..n`; D of branching `i`
/// feeds A of branching `i + 1`.
pub fn build_roundabout(p: usize, branch_count: usize) -> Result<CircuitTemplate, CircuitError> {
    check_p(p)?;
    if branch_count < 3 {
        return Err(CircuitError::BadLayout {
            cell: "A0".into(),
            msg: "a round-about needs at least 3 branchings".into(),
        });
    }
    let n = branch_count;
    let mut cells = Vec::new();
    let mut stubs = Vec::new();
    for i in 0..n {
        cells.extend(crossing_cells(&i.to_string(), |name, target| match (name, target) {
            ("D", "A") => Some(format!("A{}", (i + 1) % n)),
            ("A", "D") => Some(format!("D{}", (i + n - 1) % n)),
            _ => None,
        }));
        stubs.push((format!("CE{i}"), format!("trE{i}")));
    }
    let entries: Vec<String> = (0..n).map(|i| format!("trE{i}")).collect();
    let exits: Vec<String> = (0..n).map(|i| format!("F2{i}")).collect();
    let t = CircuitTemplate { name: "roundabout".into(), p: 13, cells, stubs, entries, exits };
    t.lift(p)
}

/// Passive merge: particles from B (through bB) or C (through bC) pass O
/// and leave by A.
pub fn build_fixed_switch(p: usize) -> Result<CircuitTemplate, CircuitError> {
    check_p(p)?;
    let cells = vec![
        cell("aA", 'W', "B,B,W,B,@A,B,W,W,W,W,W,W,W", None),
        cell("A", 'W', "B,B,@aA,B,@O,B,W,W,W,W,W,W,W", None),
        cell("O", 'W', "B,B,@A,B,W,W,B,@C,B,@B,B,W,W", Some("ofx")),
        cell("B", 'W', "B,B,W,W,W,W,W,W,W,B,@bB,B,@O", None),
        cell("bB", 'W', "B,B,W,W,W,W,W,W,W,B,W,B,@B", None),
        cell("C", 'W', "B,B,@O,B,@bC,B,W,W,W,W,W,W,W", None),
        cell("bC", 'W', "B,B,@C,B,W,B,W,W,W,W,W,W,W", None),
    ];
    template("fixed", cells, &[], &["bB", "bC"], &["aA"]).lift(p)
}

/// Marks of the active switch: H black selects C, K black selects B.
fn marks(selected: Leg) -> (char, char) {
    match selected {
        Leg::C => ('B', 'W'),
        Leg::B => ('W', 'B'),
    }
}

/// Active part shared by the flip-flop and the active memory switch: the
/// particle comes from bA through A to O and leaves through B/aB or C/aC.
/// `memory` selects the memory variant of D (kind maD, linked to D1 when
/// `d1` is set).
fn active_cells(selected: Leg, memory: bool, d1: bool) -> Vec<CellSpec> {
    let (h, k) = marks(selected);
    let d_slots = match (memory, d1) {
        (false, _) => "@O,@C,@K,B,W,W,B,W,W,B,W,@H,@B",
        (true, false) => "@O,@C,@K,B,W,B,W,B,B,B,W,@H,@B",
        (true, true) => "@O,@C,@K,B,W,B,@D1,B,B,B,W,@H,@B",
    };
    vec![
        cell("bA", 'W', "B,B,@A,B,W,B,W,W,W,W,W,W,W", None),
        cell("A", 'W', "B,B,@O,B,@bA,B,W,W,W,W,W,W,W", None),
        cell("O", 'W', "B,@A,B,W,W,B,@C,B,@B,B,W,W,W", Some("off")),
        cell("B", 'W', "B,B,@aB,B,@O,@D,@H,W,W,B,B,W,W", Some("ffB")),
        cell("aB", 'W', "B,B,W,B,@B,B,W,W,W,W,W,W,W", None),
        cell("C", 'W', "B,B,W,W,B,B,W,W,@K,@D,@O,B,@aC", Some("ffC")),
        cell("aC", 'W', "B,B,W,B,@C,B,W,W,W,W,W,W,W", None),
        cell("D", 'B', d_slots, Some(if memory { "maD" } else { "ffD" })),
        cell("H", h, "@B,@D,B,B,B,B,B,W,W,W,W,W,W", Some("ffH")),
        cell("K", k, "@C,W,B,B,B,B,B,W,W,W,W,W,@D", Some("ffK")),
    ]
}

/// Flip-flop: every passage leaves by the selected leg, then D flashes and
/// the selection toggles.
pub fn build_flipflop(p: usize, selected: Leg) -> Result<CircuitTemplate, CircuitError> {
    check_p(p)?;
    template("flipflop", active_cells(selected, false, false), &[("D", "O")], &["bA"], &["aB", "aC"]).lift(p)
}

/// Active memory switch alone: passages leave by the selected leg and change
/// nothing.
pub fn build_active_memory(p: usize, selected: Leg) -> Result<CircuitTemplate, CircuitError> {
    check_p(p)?;
    template("active-memory", active_cells(selected, true, false), &[("D", "O")], &["bA"], &["aB", "aC"]).lift(p)
}

/// Passive part: particles from X (through bX) or Y (through bY) pass O and
/// leave by V. I/J mark the selected leg (I black: Y selected); Z flashes
/// on a passage through the non-selected leg and its signal travels Z1, p2,
/// M, p4 to D1, which makes D of the active part flash.
fn passive_cells(selected: Leg, o_name: &str) -> Vec<CellSpec> {
    let (i, j) = marks(selected);
    let o = |s: &str| s.replace("@O", &format!("@{o_name}"));
    vec![
        cell("aV", 'W', "B,B,W,B,@V,B,W,W,W,W,W,W,W", None),
        cell("V", 'W', &o("B,B,@aV,B,@O,B,W,W,W,W,W,W,W"), None),
        cell(o_name, 'W', "B,B,@V,B,W,W,B,@Y,@Z,@X,B,W,W", Some("ofx")),
        cell("X", 'W', &o("@O,@Z,@I,W,B,B,B,B,B,@bX,B,B,B"), Some("mX")),
        cell("bX", 'W', "B,B,@X,B,W,B,W,W,W,W,W,W,W", None),
        cell("Y", 'W', &o("@O,B,B,B,@bY,B,B,B,W,W,W,@J,@Z"), Some("mY")),
        cell("bY", 'W', "B,B,@Y,B,W,B,W,W,W,W,W,W,W", None),
        cell("Z", 'B', &o("@O,@Y,@J,W,B,B,B,@Z1,B,B,W,@I,@X"), Some("mZ")),
        cell("I", i, "@X,@Z,W,W,B,B,B,B,W,B,B,W,W", Some("mI")),
        cell("J", j, "@Y,W,B,B,B,B,W,B,B,W,W,W,@Z", Some("mJ")),
        cell("Z1", 'W', "@Z,B,W,B,B,B,B,B,B,@p2,B,W,B", Some("mZ1")),
        cell("p2", 'W', "B,B,@M,B,@Z1,B,W,W,W,W,W,W,W", None),
        cell("M", 'W', "B,B,@p4,B,@p2,B,W,W,W,W,W,W,W", None),
        cell("p4", 'W', "B,B,@D1,B,@M,B,W,W,W,W,W,W,W", None),
        cell("D1", 'W', "B,B,W,W,B,B,W,W,W,B,@p4,B,@D", Some("mD1")),
    ]
}

/// Passive memory switch with the part of the active switch that reacts to
/// D (D, H, K and the frozen legs B and C). `selected` is the leg the
/// passive switch expects: B pairs with X, C with Y.
pub fn build_passive_memory(p: usize, selected: Leg) -> Result<CircuitTemplate, CircuitError> {
    check_p(p)?;
    let (h, k) = marks(selected);
    let mut cells = passive_cells(selected, "O");
    cells.extend([
        cell("D", 'B', "W,@C,@K,B,W,B,@D1,B,B,B,W,@H,@B", Some("maD")),
        cell("H", h, "@B,@D,B,B,B,B,B,W,W,W,W,W,W", Some("ffH")),
        cell("K", k, "@C,W,B,B,B,B,B,W,W,W,W,W,@D", Some("ffK")),
        cell("B", 'W', "B,B,W,B,W,@D,@H,W,W,B,B,W,W", Some("ffB")),
        cell("C", 'W', "B,B,W,W,B,B,W,W,@K,@D,W,B,W", Some("ffC")),
    ]);
    template("passive-memory", cells, &[], &["bX", "bY"], &["aV"]).lift(p)
}

/// Complete memory switch: the active switch (entry bA, exits aB/aC) and
/// the passive switch (entries bX/bY, O renamed T, exit aV) joined by the
/// five-cell path Z1, p2, M, p4, D1.
pub fn build_memory_switch(p: usize, selected: Leg) -> Result<CircuitTemplate, CircuitError> {
    check_p(p)?;
    let mut cells = active_cells(selected, true, true);
    cells.extend(passive_cells(selected, "T"));
    template("memory", cells, &[("D", "O")], &["bA", "bX", "bY"], &["aB", "aC", "aV"]).lift(p)
}

/// Slots of a template cell rendered in file notation (for diagnostics).
pub fn describe_cell(c: &CellSpec) -> String {
    format!("{} {} {}", c.name, c.state, format_slots(&c.slots))
}
