use hypca_rulecore::{parse_rules, RuleTable};

use crate::GenError;

/// The transcribed p = 13 rule file shipped with the repository.
pub const P13_RULES: &str = include_str!("../../../rules/p13.rules");

/// Parses a p = 13 rule file, rejecting files written for another p.
pub fn load_p13_ruleset(text: &str) -> Result<RuleTable, GenError> {
    let table = parse_rules(text)?;
    if table.p() != 13 {
        return Err(GenError::WrongP { expected: 13, found: table.p() });
    }
    Ok(table)
}

pub fn shipped_p13() -> RuleTable {
    load_p13_ruleset(P13_RULES).expect("shipped p=13 rules are consistent")
}
