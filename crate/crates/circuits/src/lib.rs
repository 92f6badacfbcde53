//! Railway circuits of the {p,3} automaton: tracks, the round-about
//! crossing, the fixed switch, the flip-flop and the memory switch, plus the
//! scenarios whose traces are checked against their published tables.
//!
//! Templates are wired at p = 13 and widened to any p >= 17 through the
//! layout kinds of `hypca-genrules`.

mod builders;
mod capture;
mod catalog;
mod error;
mod scenario;
mod template;

pub use builders::{
    build_active_memory, build_crossing, build_fixed_switch, build_flipflop, build_memory_switch, build_passive_memory,
    build_roundabout, build_track, describe_cell, Direction, Leg, TrackShape,
};
pub use capture::capture_situations;
pub use catalog::{catalog_scenario, memory_scenario, roundabout_scenario, scenario_catalog, SCENARIO_NAMES};
pub use error::CircuitError;
pub use scenario::{emit_scenario, parse_scenario, Scenario};
pub use template::{check_p, CellSpec, CircuitTemplate};
