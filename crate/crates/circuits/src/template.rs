use hypca_engine::{RegionBuilder, SlotSpec, TrackedRegion};
use hypca_genrules::{kind, MIN_GENERATED_P};
use hypca_rulecore::State;

use crate::CircuitError;

/// A named cell of a template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellSpec {
    pub name: String,
    pub state: State,
    /// Counterclockwise neighbour slots.
    pub slots: Vec<SlotSpec>,
    /// Layout kind used when the template is widened to p >= 17; plain
    /// track cells leave it empty and are classified from their slots.
    pub kind: Option<String>,
}

/// Idle configuration of a circuit as a tracked-region blueprint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitTemplate {
    pub name: String,
    pub p: usize,
    pub cells: Vec<CellSpec>,
    /// One-sided references `(from, to)` allowed by the symmetry check.
    pub stubs: Vec<(String, String)>,
    pub entries: Vec<String>,
    pub exits: Vec<String>,
}

/// Slot list in scenario-file notation: `W`, `B` or `@name`, comma
/// separated.
pub(crate) fn parse_slots(text: &str) -> Result<Vec<SlotSpec>, String> {
    text.split(',')
        .map(|s| match s.trim() {
            "W" => Ok(SlotSpec::Env(State::W)),
            "B" => Ok(SlotSpec::Env(State::B)),
            r if r.len() > 1 && r.starts_with('@') => Ok(SlotSpec::Ref(r[1..].to_string())),
            other => Err(format!("bad slot {other:?}")),
        })
        .collect()
}

pub(crate) fn format_slots(slots: &[SlotSpec]) -> String {
    slots
        .iter()
        .map(|s| match s {
            SlotSpec::Env(st) => st.to_string(),
            SlotSpec::Ref(n) => format!("@{n}"),
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// p = 13 cell from `name state slots [kind]`; used by the builders.
pub(crate) fn cell(name: &str, state: char, slots: &str, kind: Option<&str>) -> CellSpec {
    CellSpec {
        name: name.to_string(),
        state: State::from_char(state).expect("builder state"),
        slots: parse_slots(slots).expect("builder slots"),
        kind: kind.map(str::to_string),
    }
}

/// Whether circuits exist for `p`: the drawn case 13 and every p >= 17.
pub fn check_p(p: usize) -> Result<(), CircuitError> {
    if p == 13 || p >= MIN_GENERATED_P {
        Ok(())
    } else {
        Err(CircuitError::UnsupportedP(p))
    }
}

// Corner cells at p >= 17 are laid out natively (two contiguous milestones,
// spacer p - 9); `prev`/`next` are the upstream and downstream cells.
pub(crate) fn corner_slots(p: usize, a_side: bool, prev: SlotSpec, next: SlotSpec) -> Vec<SlotSpec> {
    let (b, w) = (SlotSpec::Env(State::B), SlotSpec::Env(State::W));
    let mut out = vec![b.clone(), b.clone()];
    if a_side {
        out.extend([next, w.clone(), w.clone(), b.clone()]);
        out.extend(std::iter::repeat_n(w.clone(), p - 9));
        out.extend([b, w, prev]);
    } else {
        out.extend([prev, w.clone(), b.clone()]);
        out.extend(std::iter::repeat_n(w.clone(), p - 9));
        out.extend([b, w.clone(), w, next]);
    }
    out
}

impl CircuitTemplate {
    pub fn cell(&self, name: &str) -> Option<&CellSpec> {
        self.cells.iter().find(|c| c.name == name)
    }

    pub fn region(&self) -> Result<TrackedRegion, CircuitError> {
        let mut b = RegionBuilder::new(self.p);
        for c in &self.cells {
            b.cell(c.name.clone(), c.state, c.slots.clone());
        }
        for (from, to) in &self.stubs {
            b.stub(from.clone(), to.clone());
        }
        Ok(b.build()?)
    }

    /// The same circuit at `p`. Widening starts from the p = 13 layout:
    /// each cell keeps the neighbours its kind declares live and gets the
    /// kind's milestones and spacer.
    pub fn lift(&self, p: usize) -> Result<CircuitTemplate, CircuitError> {
        check_p(p)?;
        if p == self.p {
            return Ok(self.clone());
        }
        if self.p != 13 || p < MIN_GENERATED_P {
            return Err(CircuitError::UnsupportedP(p));
        }
        let mut out = self.clone();
        out.p = p;
        for c in &mut out.cells {
            c.slots = lift_cell(c, p)?;
        }
        Ok(out)
    }
}

fn is_white(s: &SlotSpec) -> bool {
    *s == SlotSpec::Env(State::W)
}

/// Kind of a plain p = 13 track cell: `track_b` when the live neighbours sit
/// on slots 11 and 13, `track_a` otherwise.
pub(crate) fn track_kind(slots: &[SlotSpec]) -> &'static str {
    if !is_white(&slots[9]) && !is_white(&slots[11]) && is_white(&slots[3]) {
        "track_b"
    } else {
        "track_a"
    }
}

fn lift_cell(c: &CellSpec, p: usize) -> Result<Vec<SlotSpec>, CircuitError> {
    let bad = |msg: String| CircuitError::BadLayout { cell: c.name.clone(), msg };
    if c.slots.len() != 13 {
        return Err(bad(format!("{} slots, expected 13", c.slots.len())));
    }
    match c.kind.as_deref() {
        Some("corner_a") => return Ok(corner_slots(p, true, c.slots[5].clone(), c.slots[2].clone())),
        Some("corner_b") => return Ok(corner_slots(p, false, c.slots[9].clone(), c.slots[12].clone())),
        _ => {}
    }
    let name = c.kind.as_deref().unwrap_or_else(|| track_kind(&c.slots));
    let k = kind(name)?;
    let roles = k.roles();
    for (i, s) in c.slots.iter().enumerate() {
        if matches!(s, SlotSpec::Ref(_)) && !roles.contains(&(i + 1)) {
            return Err(bad(format!("slot {} is live but kind {name} does not carry it", i + 1)));
        }
    }
    Ok(k.layout(p, |n| c.slots[n - 1].clone(), SlotSpec::Env)?)
}
