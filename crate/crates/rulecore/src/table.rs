use std::collections::BTreeMap;
use std::fmt;

use crate::state::word;
use crate::{canonical_form, format_rule, RuleError, State};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub current: State,
    pub context: Vec<State>,
    pub next: State,
}

impl Rule {
    pub fn new(current: State, context: Vec<State>, next: State) -> Self {
        Rule { current, context, next }
    }

    pub fn key(&self) -> RuleKey {
        RuleKey::new(self.current, &self.context)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rule(self))
    }
}

/// Index of a rule: current state plus the minimal rotated neighbourhood.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuleKey {
    pub current: State,
    pub context: Vec<State>,
}

impl RuleKey {
    pub fn new(current: State, context: &[State]) -> Self {
        RuleKey { current, context: canonical_form(context) }
    }
}

impl fmt::Display for RuleKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.current, word(&self.context))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoredRule {
    /// The rule as it was first inserted (not necessarily minimal).
    pub rule: Rule,
    pub provenance: String,
}

/// Conservative default: a neighbourhood with at most two black cells
/// leaves the cell unchanged.
pub fn default_next(current: State, context: &[State]) -> Option<State> {
    let blacks = context.iter().filter(|s| s.is_black()).count();
    (blacks <= 2).then_some(current)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleTable {
    p: usize,
    rules: BTreeMap<RuleKey, StoredRule>,
}

impl RuleTable {
    pub fn new(p: usize) -> Self {
        RuleTable { p, rules: BTreeMap::new() }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Stores `rule` under its canonical key. Re-inserting a rotated image
    /// with the same outcome is a no-op; a different outcome is a conflict.
    pub fn insert_rule(&mut self, rule: Rule, provenance: impl Into<String>) -> Result<(), RuleError> {
        let provenance = provenance.into();
        if rule.context.len() != self.p {
            return Err(RuleError::LengthError { line: 0, expected: self.p, found: rule.context.len() });
        }
        let key = rule.key();
        if let Some(existing) = self.rules.get(&key) {
            if existing.rule.next != rule.next {
                return Err(RuleError::Conflict {
                    current: key.current,
                    key: word(&key.context),
                    existing: existing.rule.next,
                    incoming: rule.next,
                    existing_source: existing.provenance.clone(),
                    incoming_source: provenance,
                });
            }
            return Ok(());
        }
        self.rules.insert(key, StoredRule { rule, provenance });
        Ok(())
    }

    /// Inserts every rule of `other`; stops at the first conflict.
    pub fn merge(&mut self, other: &RuleTable) -> Result<(), RuleError> {
        for stored in other.rules.values() {
            self.insert_rule(stored.rule.clone(), stored.provenance.clone())?;
        }
        Ok(())
    }

    /// Stored rule for the canonical key of (current, context), if any.
    pub fn get(&self, current: State, context: &[State]) -> Option<&StoredRule> {
        self.rules.get(&RuleKey::new(current, context))
    }

    pub fn lookup(&self, current: State, context: &[State]) -> Result<State, RuleError> {
        if let Some(stored) = self.get(current, context) {
            return Ok(stored.rule.next);
        }
        default_next(current, context)
            .ok_or_else(|| RuleError::MissingRule { current, key: word(&canonical_form(context)) })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RuleKey, &StoredRule)> {
        self.rules.iter()
    }

    /// Removes the rule stored under the key of (current, context).
    pub fn remove(&mut self, current: State, context: &[State]) -> Option<StoredRule> {
        self.rules.remove(&RuleKey::new(current, context))
    }

    /// Table dump sorted by canonical key, one rule per line, in the
    /// rule-file format (so it parses back).
    pub fn dump(&self) -> String {
        let mut out = format!("p={}\n", self.p);
        for (key, stored) in &self.rules {
            let rule = Rule::new(key.current, key.context.clone(), stored.rule.next);
            out.push_str(&format_rule(&rule));
            if !stored.provenance.is_empty() {
                out.push_str("  # ");
                out.push_str(&stored.provenance);
            }
            out.push('\n');
        }
        out
    }
}
