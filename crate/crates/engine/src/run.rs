use hypca_rulecore::{RuleError, RuleTable, State};

use crate::{EngineError, Trace, TrackedRegion};

/// Particles forced into `cell`: it is set to B at times
/// `time .. time + count`, before that row is recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Injection {
    pub time: usize,
    pub cell: String,
    pub count: usize,
}

/// One synchronous step; every context is read from the pre-step states.
pub fn step(region: &TrackedRegion, table: &RuleTable) -> Result<TrackedRegion, EngineError> {
    let mut next = region.clone();
    step_in_place(&mut next, table)?;
    Ok(next)
}

pub(crate) fn step_in_place(region: &mut TrackedRegion, table: &RuleTable) -> Result<(), EngineError> {
    let mut states = Vec::with_capacity(region.len());
    for id in 0..region.len() {
        let current = region.state(id);
        let next = table.lookup(current, &region.context(id)).map_err(|e| match e {
            RuleError::MissingRule { current, key } => {
                EngineError::MissingRule { cell: region.cell(id).name.clone(), time: region.time(), current, key }
            }
            other => EngineError::Rule(other),
        })?;
        states.push(next);
    }
    region.advance(states);
    Ok(())
}

pub fn run(region: &TrackedRegion, table: &RuleTable, steps: usize, watch: &[&str]) -> Result<Trace, EngineError> {
    run_with(region, table, steps, watch, &[])
}

/// Records `steps` rows; row `t` holds the states before step `t`.
pub fn run_with(
    region: &TrackedRegion,
    table: &RuleTable,
    steps: usize,
    watch: &[&str],
    injections: &[Injection],
) -> Result<Trace, EngineError> {
    let ids = watch
        .iter()
        .map(|w| region.id_of(w).ok_or_else(|| EngineError::UnknownCell(w.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let ports = injections
        .iter()
        .map(|inj| region.id_of(&inj.cell).ok_or_else(|| EngineError::UnknownCell(inj.cell.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let mut region = region.clone();
    let mut trace = Trace::new(watch.iter().map(|w| w.to_string()).collect());
    for t in 1..=steps {
        for (inj, &port) in injections.iter().zip(&ports) {
            if inj.time <= t && t < inj.time + inj.count {
                region.set_state(port, State::B);
            }
        }
        trace.push(ids.iter().map(|&i| region.state(i)).collect());
        if t < steps {
            step_in_place(&mut region, table)?;
        }
    }
    Ok(trace)
}
