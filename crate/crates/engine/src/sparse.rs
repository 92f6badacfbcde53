use std::collections::{BTreeMap, BTreeSet};

use hypca_rulecore::{RuleError, RuleTable, State};
use hypca_tiling::{CellCoord, TilingBall};

use crate::{EngineError, Injection, Trace};

/// Non-white tiles of a configuration; absent tiles are W.
pub type SparseConfig = BTreeMap<CellCoord, State>;

fn black_ids(config: &SparseConfig, ball: &TilingBall) -> Result<BTreeSet<usize>, EngineError> {
    let mut ids = BTreeSet::new();
    for (c, &s) in config {
        if s == State::W {
            continue;
        }
        match ball.id_of(c) {
            Some(id) if ball.is_interior(id) => {
                ids.insert(id);
            }
            _ => return Err(EngineError::SupportEscape(c.label(ball.p()))),
        }
    }
    Ok(ids)
}

fn context(ball: &TilingBall, id: usize, black: &BTreeSet<usize>) -> Vec<State> {
    ball.neighbors(id)
        .iter()
        .map(|n| match n {
            Some(t) if black.contains(t) => State::B,
            _ => State::W,
        })
        .collect()
}

/// One synchronous step over the interior of `ball`.
///
/// Only tiles in or next to the support are evaluated, unless the table
/// does not keep the all-white neighbourhood white. A frontier tile that
/// would turn black (or cannot be decided) is a `SupportEscape`.
pub fn step_sparse(config: &SparseConfig, table: &RuleTable, ball: &TilingBall) -> Result<SparseConfig, EngineError> {
    let black = black_ids(config, ball)?;
    let quiet = vec![State::W; ball.p()];
    let candidates: BTreeSet<usize> = if table.lookup(State::W, &quiet).ok() == Some(State::W) {
        black.iter().flat_map(|&id| std::iter::once(id).chain(ball.neighbors(id).iter().flatten().copied())).collect()
    } else {
        ball.ids().collect()
    };
    let mut out = SparseConfig::new();
    for id in candidates {
        let current = if black.contains(&id) { State::B } else { State::W };
        let ctx = context(ball, id, &black);
        let label = || ball.coord(id).label(ball.p());
        let next = table.lookup(current, &ctx);
        if !ball.is_interior(id) {
            if next != Ok(State::W) {
                return Err(EngineError::SupportEscape(label()));
            }
            continue;
        }
        let next = next.map_err(|e| match e {
            RuleError::MissingRule { current, key } => {
                EngineError::MissingRule { cell: label(), time: 0, current, key }
            }
            other => EngineError::Rule(other),
        })?;
        if next != State::W {
            out.insert(ball.coord(id).clone(), next);
        }
    }
    Ok(out)
}

/// Sparse counterpart of [`run_with`](crate::run_with): `names` binds the
/// watched and injected cell names to tiles.
pub fn run_sparse(
    config: &SparseConfig,
    table: &RuleTable,
    ball: &TilingBall,
    steps: usize,
    names: &BTreeMap<String, CellCoord>,
    watch: &[&str],
    injections: &[Injection],
) -> Result<Trace, EngineError> {
    let coord = |n: &str| names.get(n).cloned().ok_or_else(|| EngineError::UnknownCell(n.to_string()));
    let watched = watch.iter().map(|w| coord(w)).collect::<Result<Vec<_>, _>>()?;
    let ports = injections.iter().map(|i| coord(&i.cell)).collect::<Result<Vec<_>, _>>()?;
    let mut config = config.clone();
    let mut trace = Trace::new(watch.iter().map(|w| w.to_string()).collect());
    for t in 1..=steps {
        for (inj, port) in injections.iter().zip(&ports) {
            if inj.time <= t && t < inj.time + inj.count {
                config.insert(port.clone(), State::B);
            }
        }
        trace.push(watched.iter().map(|c| config.get(c).copied().unwrap_or(State::W)).collect());
        if t < steps {
            config = step_sparse(&config, table, ball).map_err(|e| match e {
                EngineError::MissingRule { cell, current, key, .. } => {
                    EngineError::MissingRule { cell, time: t, current, key }
                }
                other => other,
            })?;
        }
    }
    Ok(trace)
}
