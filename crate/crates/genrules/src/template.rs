use std::fmt;
use std::str::FromStr;

use hypca_rulecore::{Rule, State};

use crate::GenError;

/// Exponent of a template atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exponent {
    Fixed(usize),
    /// `p - 8`, the spacer of ordinary track cells.
    K,
    /// `p - 9`, the spacer of corner cells (written `j`).
    KPrime,
}

impl Exponent {
    pub fn value(self, p: usize) -> usize {
        match self {
            Exponent::Fixed(n) => n,
            Exponent::K => p - 8,
            Exponent::KPrime => p - 9,
        }
    }
}

/// A rule whose neighbourhood has symbolic run lengths, e.g.
/// `W BWWBWWWBW^k -> W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleTemplate {
    pub current: State,
    pub atoms: Vec<(State, Exponent)>,
    pub next: State,
}

impl RuleTemplate {
    pub fn instantiate(&self, p: usize) -> Result<Rule, GenError> {
        if p < crate::MIN_GENERATED_P {
            return Err(GenError::UnsupportedP(p));
        }
        let context = self.atoms.iter().flat_map(|&(s, e)| std::iter::repeat_n(s, e.value(p))).collect();
        Ok(Rule::new(self.current, context, self.next))
    }
}

impl FromStr for RuleTemplate {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        let words: Vec<&str> = text.split_whitespace().collect();
        let [cur, ctx, "->", next] = words[..] else {
            return Err(format!("expected `<S> <ctx> -> <S>`: {text:?}"));
        };
        let state = |w: &str| w.parse::<State>().map_err(|_| format!("bad state {w:?}"));
        let mut atoms = Vec::new();
        let mut chars = ctx.chars().peekable();
        while let Some(c) = chars.next() {
            let s = State::from_char(c).ok_or_else(|| format!("bad symbol {c:?}"))?;
            let mut exp = Exponent::Fixed(1);
            if chars.peek() == Some(&'^') {
                chars.next();
                exp = match chars.peek() {
                    Some('k') => Exponent::K,
                    Some('j') => Exponent::KPrime,
                    _ => {
                        let mut n = String::new();
                        while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                            n.push(*d);
                            chars.next();
                        }
                        Exponent::Fixed(n.parse().map_err(|_| format!("bad exponent in {ctx:?}"))?)
                    }
                };
                if matches!(exp, Exponent::K | Exponent::KPrime) {
                    chars.next();
                }
            }
            atoms.push((s, exp));
        }
        Ok(RuleTemplate { current: state(cur)?, atoms, next: state(next)? })
    }
}

impl fmt::Display for RuleTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.current)?;
        for &(s, e) in &self.atoms {
            match e {
                Exponent::Fixed(1) => write!(f, "{s}")?,
                Exponent::Fixed(n) => write!(f, "{s}^{n}")?,
                Exponent::K => write!(f, "{s}^k")?,
                Exponent::KPrime => write!(f, "{s}^j")?,
            }
        }
        write!(f, " -> {}", self.next)
    }
}
