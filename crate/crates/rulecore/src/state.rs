use std::fmt;
use std::str::FromStr;

/// Cell state. `W` is quiescent. The derived order puts `B` before `W`,
/// which is the order used for minimal rotated forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum State {
    B,
    W,
}

impl State {
    pub fn from_char(c: char) -> Option<State> {
        match c {
            'W' => Some(State::W),
            'B' => Some(State::B),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            State::W => 'W',
            State::B => 'B',
        }
    }

    pub fn flipped(self) -> State {
        match self {
            State::W => State::B,
            State::B => State::W,
        }
    }

    pub fn is_black(self) -> bool {
        self == State::B
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for State {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next().and_then(State::from_char), chars.next()) {
            (Some(st), None) => Ok(st),
            _ => Err(format!("not a state: {s:?}")),
        }
    }
}

/// Renders a context as a plain word, e.g. `BBWBWBWWWWWWW`.
pub fn word(ctx: &[State]) -> String {
    ctx.iter().map(|s| s.as_char()).collect()
}
