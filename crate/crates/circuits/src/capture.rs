use std::collections::BTreeMap;

use hypca_engine::{step, Injection};
use hypca_genrules::{kind, Situation};
use hypca_rulecore::{RuleTable, State};

use crate::template::track_kind;
use crate::{catalog_scenario, memory_scenario, roundabout_scenario, CircuitError, Leg, Scenario, SCENARIO_NAMES};

type Key = (String, State, Vec<State>);

fn observe(
    s: &Scenario,
    table: &RuleTable,
    seen: &mut BTreeMap<Key, BTreeMap<State, String>>,
) -> Result<(), CircuitError> {
    let mut region = s.template.region()?;
    let mut kinds = Vec::new();
    for c in &s.template.cells {
        let name = c.kind.clone().unwrap_or_else(|| track_kind(&c.slots).to_string());
        // corner cells have their own native layout and no lifted situations
        kinds.push(kind(&name).ok());
    }
    let ports: Vec<(usize, &Injection)> = s
        .injections
        .iter()
        .map(|inj| {
            region.id_of(&inj.cell).map(|id| (id, inj)).ok_or_else(|| CircuitError::UnknownRole(inj.cell.clone()))
        })
        .collect::<Result<_, _>>()?;
    for t in 1..=s.steps {
        for &(id, inj) in &ports {
            if inj.time <= t && t < inj.time + inj.count {
                region.set_state(id, State::B);
            }
        }
        let next = step(&region, table)?;
        for (id, k) in kinds.iter().enumerate() {
            let Some(k) = k else { continue };
            let ctx = region.context(id);
            let roles = k.roles().iter().map(|&r| ctx[r - 1]).collect();
            let source = format!("{}:{}", s.name, region.cell(id).name);
            seen.entry((k.name.to_string(), region.state(id), roles))
                .or_default()
                .entry(next.state(id))
                .or_insert(source);
        }
        region = next;
    }
    Ok(())
}

/// Re-derives the gadget behaviour table from p = 13 runs of every traced
/// scenario, the four entries of a four-branch round-about and the four
/// complete memory-switch passages. Each situation keeps the first run and
/// cell where it was seen. Errors if one situation had two outcomes.
pub fn capture_situations(table: &RuleTable) -> Result<Vec<Situation>, CircuitError> {
    let mut runs = Vec::new();
    for name in SCENARIO_NAMES {
        runs.push(catalog_scenario(name, 13)?);
    }
    for entry in 0..4 {
        runs.push(roundabout_scenario(13, 4, entry)?);
    }
    for sel in [Leg::B, Leg::C] {
        for port in ["bX", "bY"] {
            let mut s = memory_scenario(13, sel, port)?;
            s.name = format!("{}-{}", s.name, if sel == Leg::B { "b" } else { "c" });
            runs.push(s);
        }
    }
    let mut seen = BTreeMap::new();
    for s in &runs {
        observe(s, table, &mut seen)?;
    }
    let mut out = Vec::new();
    for ((kind, current, roles), nexts) in seen {
        if nexts.len() > 1 {
            return Err(CircuitError::BadLayout {
                cell: nexts.values().cloned().collect::<Vec<_>>().join(", "),
                msg: format!("kind {kind} reaches two states from one situation"),
            });
        }
        let (next, source) = nexts.into_iter().next().unwrap();
        out.push(Situation { kind, current, roles, next, source });
    }
    Ok(out)
}
