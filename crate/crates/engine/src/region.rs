use std::collections::{BTreeSet, HashMap};

use hypca_rulecore::State;

use crate::EngineError;

/// A neighbour slot: a frozen environment state or another tracked cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Env(State),
    Ref(usize),
}

/// Slot as written by a builder, before names are resolved.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SlotSpec {
    Env(State),
    Ref(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackedCell {
    pub name: String,
    /// Counterclockwise neighbour slots.
    pub slots: Vec<Slot>,
}

/// Finite region under inspection, with a double-buffered state vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackedRegion {
    p: usize,
    cells: Vec<TrackedCell>,
    states: Vec<State>,
    index: HashMap<String, usize>,
    /// Declared one-sided references `(from, to)`.
    stubs: BTreeSet<(usize, usize)>,
    time: usize,
}

impl TrackedRegion {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[TrackedCell] {
        &self.cells
    }

    pub fn cell(&self, id: usize) -> &TrackedCell {
        &self.cells[id]
    }

    pub fn id_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn state(&self, id: usize) -> State {
        self.states[id]
    }

    pub fn state_of(&self, name: &str) -> Result<State, EngineError> {
        let id = self.id_of(name).ok_or_else(|| EngineError::UnknownCell(name.to_string()))?;
        Ok(self.states[id])
    }

    pub fn set_state(&mut self, id: usize, s: State) {
        self.states[id] = s;
    }

    pub fn stubs(&self) -> &BTreeSet<(usize, usize)> {
        &self.stubs
    }

    /// Current time; 1 before the first step.
    pub fn time(&self) -> usize {
        self.time
    }

    /// Neighbourhood of cell `id` under the current states.
    pub fn context(&self, id: usize) -> Vec<State> {
        self.cells[id]
            .slots
            .iter()
            .map(|s| match *s {
                Slot::Env(st) => st,
                Slot::Ref(r) => self.states[r],
            })
            .collect()
    }

    pub(crate) fn advance(&mut self, states: Vec<State>) {
        self.states = states;
        self.time += 1;
    }
}

/// Collects named cells, then resolves references and checks symmetry.
#[derive(Debug, Clone, Default)]
pub struct RegionBuilder {
    p: usize,
    cells: Vec<(String, State, Vec<SlotSpec>)>,
    stubs: Vec<(String, String)>,
}

impl RegionBuilder {
    pub fn new(p: usize) -> Self {
        RegionBuilder { p, ..Default::default() }
    }

    pub fn cell(&mut self, name: impl Into<String>, state: State, slots: Vec<SlotSpec>) -> &mut Self {
        self.cells.push((name.into(), state, slots));
        self
    }

    /// Declares that `from` may refer to `to` without a reference back.
    pub fn stub(&mut self, from: impl Into<String>, to: impl Into<String>) -> &mut Self {
        self.stubs.push((from.into(), to.into()));
        self
    }

    pub fn build(&self) -> Result<TrackedRegion, EngineError> {
        let mut index = HashMap::new();
        for (i, (name, _, _)) in self.cells.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(EngineError::DuplicateCell(name.clone()));
            }
        }
        let mut cells = Vec::with_capacity(self.cells.len());
        for (name, _, specs) in &self.cells {
            if specs.len() != self.p {
                return Err(EngineError::WrongArity { cell: name.clone(), expected: self.p, found: specs.len() });
            }
            let slots = specs
                .iter()
                .map(|s| match s {
                    SlotSpec::Env(st) => Ok(Slot::Env(*st)),
                    SlotSpec::Ref(t) => index
                        .get(t)
                        .map(|&i| Slot::Ref(i))
                        .ok_or_else(|| EngineError::DanglingRef { cell: name.clone(), target: t.clone() }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            cells.push(TrackedCell { name: name.clone(), slots });
        }
        let mut stubs = BTreeSet::new();
        for (a, b) in &self.stubs {
            let lookup = |n: &String| index.get(n).copied().ok_or_else(|| EngineError::UnknownCell(n.clone()));
            stubs.insert((lookup(a)?, lookup(b)?));
        }
        for (i, c) in cells.iter().enumerate() {
            for slot in &c.slots {
                let Slot::Ref(j) = *slot else { continue };
                let back = cells[j].slots.contains(&Slot::Ref(i));
                if !back && !stubs.contains(&(i, j)) {
                    return Err(EngineError::Asymmetric { from: c.name.clone(), to: cells[j].name.clone() });
                }
            }
        }
        let states = self.cells.iter().map(|(_, s, _)| *s).collect();
        Ok(TrackedRegion { p: self.p, cells, states, index, stubs, time: 1 })
    }
}
