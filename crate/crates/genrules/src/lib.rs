//! Rule tables for the railway automaton.
//!
//! For p = 13 the rules are data: `rules/p13.rules`, compiled in. For
//! p >= 17 they are generated. Track rules come from parametric templates
//! whose exponents grow with p. Every other cell ("gadget" cells of the
//! crossings and switches) is described by a [`Kind`]: a fixed word with a
//! block of four black cells as anchor, a few live slots ("roles") copied
//! from the cell's p = 13 neighbourhood, and one white spacer run that
//! absorbs the extra width. The behaviour of each kind is a list of
//! situations (`rules/lifted.situations`) giving the next state for each
//! combination of own state and role states.

mod error;
mod families;
mod kinds;
mod p13;
mod situations;
mod template;

pub use error::GenError;
pub use families::{
    emit_rules, generate, generate_crossing_rules, generate_family, generate_fixed_switch_rules,
    generate_flipflop_rules, generate_memory_rules, generate_table, generate_track_rules, Family, GeneratedRule,
};
pub use kinds::{kind, kinds, Kind, Token};
pub use p13::{load_p13_ruleset, shipped_p13, P13_RULES};
pub use situations::{parse_situations, shipped_situations, Situation, LIFTED_SITUATIONS};
pub use template::{Exponent, RuleTemplate};

/// Smallest p for which rules are generated.
pub const MIN_GENERATED_P: usize = 17;
