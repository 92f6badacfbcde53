use std::fmt;
use std::str::FromStr;

use hypca_rulecore::{format_rule, Rule, RuleTable};

use crate::{kinds, shipped_situations, GenError, RuleTemplate, MIN_GENERATED_P};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Tracks,
    Crossing,
    Fixed,
    FlipFlop,
    Memory,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Tracks, Family::Crossing, Family::Fixed, Family::FlipFlop, Family::Memory];

    pub fn name(self) -> &'static str {
        match self {
            Family::Tracks => "tracks",
            Family::Crossing => "crossing",
            Family::Fixed => "fixed",
            Family::FlipFlop => "flipflop",
            Family::Memory => "memory",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| format!("unknown family {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedRule {
    pub rule: Rule,
    pub provenance: String,
}

// Track cells: `k = p - 8` on ordinary cells, `j = p - 9` on corners.
// c/d: a cell of a straight track for the two senses of motion;
// e/f: the same at a corner (two contiguous milestones);
// g/h: the cell behind the particle when two particles follow each other.
const TRACK_TEMPLATES: &[(&str, &[&str])] = &[
    (
        "c",
        &[
            "W BWWBWWWBW^k -> W",
            "W BBWWWBW^kBW -> B",
            "B BWWBWWWBW^k -> W",
            "W BBWWBW^kBWW -> W",
            "W BBWBWWWBW^k -> B",
            "W BBW^kBWWBWW -> W",
            "W BWBWBW^kBWW -> W",
        ],
    ),
    (
        "d",
        &[
            "W BWWBW^kBWWW -> W",
            "W BBWBW^kBWWW -> B",
            "B BWWBW^kBWWW -> W",
            "W BBWWBW^kBWW -> W",
            "W BBW^kBWWWBW -> B",
            "W BBWWBWWBW^k -> W",
            "W BWBWBWWBW^k -> W",
        ],
    ),
    ("e", &["W BBWWWBW^jBWW -> W", "W BBBWWWBW^jBW -> B", "B BBWWWBW^jBWW -> W", "W BBBWWBW^jBWW -> W"]),
    ("f", &["W BBWWBW^jBWWW -> W", "W BBBWBW^jBWWW -> B", "B BBWWBW^jBWWW -> W", "W BBBWWBW^jBWW -> W"]),
    ("g", &["B BBWWWBW^kBW -> B", "B BBWWBW^kBWW -> W", "B BBWBW^kBWWW -> B", "B BBWWBW^kBWW -> W"]),
    ("h", &["B BBBWWWBW^jBW -> B", "B BBBWWBW^jBWW -> W", "B BBBWBW^jBWWW -> B", "B BBBWWBW^jBWW -> W"]),
];

fn check_p(p: usize) -> Result<(), GenError> {
    if p < MIN_GENERATED_P {
        return Err(GenError::UnsupportedP(p));
    }
    Ok(())
}

fn template_rules(p: usize) -> Result<Vec<GeneratedRule>, GenError> {
    let mut out = Vec::new();
    for (family, rows) in TRACK_TEMPLATES {
        for (i, row) in rows.iter().enumerate() {
            let template: RuleTemplate = row.parse().expect("built-in template");
            out.push(GeneratedRule { rule: template.instantiate(p)?, provenance: format!("track.{family}{}", i + 1) });
        }
    }
    Ok(out)
}

/// Rules of every kind belonging to `family`, from the shipped situations.
fn lifted_rules(p: usize, family: Family) -> Result<Vec<GeneratedRule>, GenError> {
    let kinds: Vec<_> = kinds().into_iter().filter(|k| k.family == family).collect();
    let mut out = Vec::new();
    for sit in shipped_situations() {
        let Some(kind) = kinds.iter().find(|k| k.name == sit.kind) else { continue };
        let context = kind.context(p, &sit.roles)?;
        out.push(GeneratedRule {
            rule: Rule::new(sit.current, context, sit.next),
            provenance: format!("{} {}", kind.name, sit.source),
        });
    }
    Ok(out)
}

pub fn generate_family(p: usize, family: Family) -> Result<Vec<GeneratedRule>, GenError> {
    check_p(p)?;
    let mut out = if family == Family::Tracks { template_rules(p)? } else { Vec::new() };
    out.extend(lifted_rules(p, family)?);
    Ok(out)
}

pub fn generate_track_rules(p: usize) -> Result<Vec<GeneratedRule>, GenError> {
    generate_family(p, Family::Tracks)
}

pub fn generate_crossing_rules(p: usize) -> Result<Vec<GeneratedRule>, GenError> {
    generate_family(p, Family::Crossing)
}

pub fn generate_fixed_switch_rules(p: usize) -> Result<Vec<GeneratedRule>, GenError> {
    generate_family(p, Family::Fixed)
}

pub fn generate_flipflop_rules(p: usize) -> Result<Vec<GeneratedRule>, GenError> {
    generate_family(p, Family::FlipFlop)
}

/// Rules proper to the memory switch; its O, B, C, H and K cells reuse the
/// flip-flop (and fixed-switch) kinds.
pub fn generate_memory_rules(p: usize) -> Result<Vec<GeneratedRule>, GenError> {
    generate_family(p, Family::Memory)
}

/// Rules of the given families, in generation order.
pub fn generate(p: usize, families: &[Family]) -> Result<Vec<GeneratedRule>, GenError> {
    let mut out = Vec::new();
    for &f in families {
        out.extend(generate_family(p, f)?);
    }
    Ok(out)
}

/// Conflict-checked table of the given families.
pub fn generate_table(p: usize, families: &[Family]) -> Result<RuleTable, GenError> {
    let mut table = RuleTable::new(p);
    for g in generate(p, families)? {
        table.insert_rule(g.rule, g.provenance)?;
    }
    Ok(table)
}

/// Rule-file text for generated rules (parses back with `parse_rules`).
pub fn emit_rules(p: usize, rules: &[GeneratedRule]) -> String {
    let mut out = format!("p={p}\n");
    for g in rules {
        out.push_str(&format_rule(&g.rule));
        out.push_str("  # ");
        out.push_str(&g.provenance);
        out.push('\n');
    }
    out
}
