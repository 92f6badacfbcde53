use std::collections::HashSet;

use hypca_engine::{run_with, Injection, SlotSpec, Trace};
use hypca_rulecore::{RuleTable, State};

use crate::template::{format_slots, parse_slots};
use crate::{CellSpec, CircuitError, CircuitTemplate};

/// A template plus what to do with it: injections, duration, watched cells
/// and optionally the expected trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub name: String,
    pub template: CircuitTemplate,
    pub injections: Vec<Injection>,
    pub steps: usize,
    pub watch: Vec<String>,
    /// Path of the expected trace as written in the scenario file.
    pub expect: Option<String>,
    pub expected: Option<Trace>,
}

impl Scenario {
    pub fn p(&self) -> usize {
        self.template.p
    }

    pub fn run(&self, table: &RuleTable) -> Result<Trace, CircuitError> {
        let region = self.template.region()?;
        let watch: Vec<&str> = self.watch.iter().map(String::as_str).collect();
        Ok(run_with(&region, table, self.steps, &watch, &self.injections)?)
    }

    /// Same scenario on the template widened to `p`. Expected traces are
    /// kept: the behaviour does not depend on p.
    pub fn lift(&self, p: usize) -> Result<Scenario, CircuitError> {
        Ok(Scenario { template: self.template.lift(p)?, ..self.clone() })
    }
}

fn names(list: &str) -> Vec<String> {
    list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

/// Parses the scenario file format:
///
/// ```text
/// p=13
/// cell <name> state=<W|B> nbrs=<s1,...,sp> [kind=<layout kind>]
/// stub <from> <to>
/// entry <name,...>
/// exit <name,...>
/// inject t=<int> port=<name> n=<1|2>
/// watch <name,...>
/// steps <int>
/// expect <path>
/// ```
pub fn parse_scenario(name: &str, text: &str) -> Result<Scenario, CircuitError> {
    let mut p = None;
    let mut cells: Vec<CellSpec> = Vec::new();
    let mut stubs = Vec::new();
    let (mut entries, mut exits) = (Vec::new(), Vec::new());
    let mut injections = Vec::new();
    let mut watch = Vec::new();
    let mut steps = None;
    let mut expect = None;
    // names are checked once every cell is known
    let mut mentioned: Vec<(usize, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |msg: String| CircuitError::SyntaxError { line, msg };
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(v) = body.strip_prefix("p=") {
            p = Some(v.trim().parse::<usize>().map_err(|_| err(format!("bad p {v:?}")))?);
            continue;
        }
        let Some(p) = p else {
            return Err(err("the `p=<int>` header must come first".into()));
        };
        let words: Vec<&str> = body.split_whitespace().collect();
        let kv = |w: &[&str]| -> Result<Vec<(String, String)>, CircuitError> {
            w.iter()
                .map(|x| {
                    x.split_once('=')
                        .map(|(k, v)| (k.to_string(), v.to_string()))
                        .ok_or_else(|| err(format!("expected key=value, got {x:?}")))
                })
                .collect()
        };
        match words[0] {
            "cell" => {
                let Some(&cname) = words.get(1) else {
                    return Err(err("cell without a name".into()));
                };
                let (mut state, mut slots, mut kind) = (None, None, None);
                for (k, v) in kv(&words[2..])? {
                    match k.as_str() {
                        "state" => state = Some(v.parse::<State>().map_err(|_| err(format!("bad state {v:?}")))?),
                        "nbrs" => slots = Some(parse_slots(&v).map_err(err)?),
                        "kind" => kind = Some(v),
                        _ => return Err(err(format!("unknown cell attribute {k:?}"))),
                    }
                }
                let (Some(state), Some(slots)) = (state, slots) else {
                    return Err(err(format!("cell {cname} needs state= and nbrs=")));
                };
                if slots.len() != p {
                    return Err(err(format!("cell {cname} has {} neighbours, expected {p}", slots.len())));
                }
                if cells.iter().any(|c| c.name == cname) {
                    return Err(err(format!("duplicate cell {cname}")));
                }
                cells.push(CellSpec { name: cname.to_string(), state, slots, kind });
            }
            "stub" => {
                let [_, a, b] = words[..] else {
                    return Err(err("usage: stub <from> <to>".into()));
                };
                mentioned.extend([(line, a.to_string()), (line, b.to_string())]);
                stubs.push((a.to_string(), b.to_string()));
            }
            "entry" | "exit" | "watch" => {
                let [kw, list] = words[..] else {
                    return Err(err(format!("usage: {} <name,...>", words[0])));
                };
                let list = names(list);
                mentioned.extend(list.iter().map(|n| (line, n.clone())));
                match kw {
                    "entry" => entries = list,
                    "exit" => exits = list,
                    _ => watch = list,
                }
            }
            "inject" => {
                let (mut t, mut port, mut n) = (None, None, None);
                for (k, v) in kv(&words[1..])? {
                    let num = || v.parse::<usize>().map_err(|_| err(format!("bad number {v:?}")));
                    match k.as_str() {
                        "t" => t = Some(num()?),
                        "port" => port = Some(v.clone()),
                        "n" => n = Some(num()?),
                        _ => return Err(err(format!("unknown inject attribute {k:?}"))),
                    }
                }
                let (Some(time), Some(cell), Some(count)) = (t, port, n) else {
                    return Err(err("inject needs t=, port= and n=".into()));
                };
                if !(1..=2).contains(&count) || time == 0 {
                    return Err(err("inject needs t >= 1 and n in {1,2}".into()));
                }
                mentioned.push((line, cell.clone()));
                injections.push(Injection { time, cell, count });
            }
            "steps" => {
                let [_, n] = words[..] else {
                    return Err(err("usage: steps <int>".into()));
                };
                steps = Some(n.parse().map_err(|_| err(format!("bad step count {n:?}")))?);
            }
            "expect" => {
                let [_, path] = words[..] else {
                    return Err(err("usage: expect <path>".into()));
                };
                expect = Some(path.to_string());
            }
            other => return Err(err(format!("unknown directive {other:?}"))),
        }
    }
    let last = text.lines().count().max(1);
    let p = p.ok_or(CircuitError::SyntaxError { line: 1, msg: "missing `p=<int>` header".into() })?;
    let steps = steps.ok_or(CircuitError::SyntaxError { line: last, msg: "missing `steps`".into() })?;
    let known: HashSet<&str> = cells.iter().map(|c| c.name.as_str()).collect();
    for c in &cells {
        for s in &c.slots {
            if let SlotSpec::Ref(t) = s {
                if !known.contains(t.as_str()) {
                    return Err(CircuitError::DanglingRef { cell: c.name.clone(), target: t.clone() });
                }
            }
        }
    }
    if let Some((_, n)) = mentioned.iter().find(|(_, n)| !known.contains(n.as_str())) {
        return Err(CircuitError::UnknownRole(n.clone()));
    }
    if entries.is_empty() {
        for inj in &injections {
            if !entries.contains(&inj.cell) {
                entries.push(inj.cell.clone());
            }
        }
    } else if let Some(inj) = injections.iter().find(|i| !entries.contains(&i.cell)) {
        return Err(CircuitError::UnknownRole(inj.cell.clone()));
    }
    let template = CircuitTemplate { name: name.to_string(), p, cells, stubs, entries, exits };
    template.region()?;
    Ok(Scenario { name: name.to_string(), template, injections, steps, watch, expect, expected: None })
}

pub fn emit_scenario(s: &Scenario) -> String {
    let t = &s.template;
    let mut out = format!("p={}\n", t.p);
    let width = t.cells.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &t.cells {
        out.push_str(&format!("cell {:<width$} state={} nbrs={}", c.name, c.state, format_slots(&c.slots)));
        if let Some(k) = &c.kind {
            out.push_str(&format!(" kind={k}"));
        }
        out.push('\n');
    }
    for (a, b) in &t.stubs {
        out.push_str(&format!("stub {a} {b}\n"));
    }
    if !t.entries.is_empty() {
        out.push_str(&format!("entry {}\n", t.entries.join(",")));
    }
    if !t.exits.is_empty() {
        out.push_str(&format!("exit {}\n", t.exits.join(",")));
    }
    for inj in &s.injections {
        out.push_str(&format!("inject t={} port={} n={}\n", inj.time, inj.cell, inj.count));
    }
    out.push_str(&format!("watch {}\n", s.watch.join(",")));
    out.push_str(&format!("steps {}\n", s.steps));
    if let Some(e) = &s.expect {
        out.push_str(&format!("expect {e}\n"));
    }
    out
}
