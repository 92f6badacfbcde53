use hypca_rulecore::{state::word, State};

use crate::GenError;

/// Behaviour table for gadget kinds, one situation per line:
/// `<kind> <own> <role states> -> <next> # <where it was observed>`.
pub const LIFTED_SITUATIONS: &str = include_str!("../../../rules/lifted.situations");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Situation {
    pub kind: String,
    pub current: State,
    pub roles: Vec<State>,
    pub next: State,
    pub source: String,
}

impl Situation {
    pub fn to_line(&self) -> String {
        let mut line = format!("{:<7} {} {} -> {}", self.kind, self.current, word(&self.roles), self.next);
        if !self.source.is_empty() {
            line.push_str(" # ");
            line.push_str(&self.source);
        }
        line
    }
}

pub fn parse_situations(text: &str) -> Result<Vec<Situation>, GenError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (body, source) = match raw.split_once('#') {
            Some((b, c)) => (b, c.trim()),
            None => (raw, ""),
        };
        let words: Vec<&str> = body.split_whitespace().collect();
        if words.is_empty() {
            continue;
        }
        let bad = |msg: String| GenError::BadData { line, msg };
        let [kind, cur, roles, "->", next] = words[..] else {
            return Err(bad(format!("expected `<kind> <S> <roles> -> <S>`, got {body:?}")));
        };
        let state = |w: &str| w.parse::<State>().map_err(|_| bad(format!("bad state {w:?}")));
        let roles = roles
            .chars()
            .map(|c| State::from_char(c).ok_or_else(|| bad(format!("bad role state {c:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(Situation {
            kind: kind.to_string(),
            current: state(cur)?,
            roles,
            next: state(next)?,
            source: source.to_string(),
        });
    }
    Ok(out)
}

pub fn shipped_situations() -> Vec<Situation> {
    parse_situations(LIFTED_SITUATIONS).expect("shipped situations parse")
}
