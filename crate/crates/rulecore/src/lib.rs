//! Rule model for two-state cellular automata on the tilings {p,3}.
//!
//! A rule is a word `current, n1 .. np -> next`. Tables are rotation
//! invariant: every rule is stored under the minimal circular rotation of
//! its neighbourhood (with `B < W`), so any rotated image finds it.

mod canon;
mod error;
mod parse;
pub mod state;
mod table;

pub use canon::{canonical_form, is_rotation_of};
pub use error::RuleError;
pub use parse::{expand_context, format_context, format_rule, parse_context, parse_rules};
pub use state::State;
pub use table::{default_next, Rule, RuleKey, RuleTable, StoredRule};
