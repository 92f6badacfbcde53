use hypca_rulecore::State;

use crate::{Family, GenError};

/// One position of a kind's layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Token {
    Fixed(State),
    /// Copies neighbour slot `n` (1-based) of the cell's p = 13 layout.
    Role(usize),
    /// White run absorbing `p - len` cells.
    Spacer,
}

/// Neighbourhood layout shared by every cell of one kind, for all p >= 17.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kind {
    pub name: &'static str,
    pub family: Family,
    pub tokens: Vec<Token>,
}

// Layout words: `B`/`W` fixed, `[n]` role slot, `*` spacer. Gadget kinds
// start with the anchor BBBB, then a two-letter gadget code (WW crossing,
// WB flip-flop/active switch, BW passive switch) and a three-letter cell
// code.
const LAYOUTS: &[(&str, Family, &str)] = &[
    ("track_a", Family::Tracks, "[6]W[5][4][3]WW[2]*"),
    ("track_b", Family::Tracks, "[10]W[11][12][13]WW[1]*"),
    ("xB", Family::Crossing, "BBBBWWBWWW[2][10][11][12][13]W*"),
    ("xC", Family::Crossing, "BBBBWWWBWW[2][3][4][5][13]W*"),
    ("xBC", Family::Crossing, "BBBBWWBBWW[1][2][12][13]W*"),
    ("xBF", Family::Crossing, "BBBBWWWWBW[1][2][3][4][13]W*"),
    ("xCE", Family::Crossing, "BBBBWWBWBW[1][2][3]W*"),
    ("ofx", Family::Fixed, "BBBBWB[3]WBBBWW[8][9][10]W*"),
    ("off", Family::FlipFlop, "BBBBWB[2]WWBBBW[7]B[9]W*"),
    ("ffB", Family::FlipFlop, "BBBBWBBWWW[3][5][6][7]W*"),
    ("ffC", Family::FlipFlop, "BBBBWBBBWW[9][10][11][13]W*"),
    ("ffD", Family::FlipFlop, "BBBBWBWBWW[1][2][3][12][13]W*"),
    ("ffH", Family::FlipFlop, "BBBBWBWWBW[1][2]W*"),
    ("ffK", Family::FlipFlop, "BBBBWBBWBW[1][13]W*"),
    ("maD", Family::Memory, "BBBBWBWBBW[1][2][3][7][12][13]W*"),
    ("mX", Family::Memory, "BBBBBWBWWW[1][2][3][10]W*"),
    ("mY", Family::Memory, "BBBBBWBBWW[1][5][12][13]W*"),
    ("mZ", Family::Memory, "BBBBBWWBWW[1][2][3][8][12][13]W*"),
    ("mI", Family::Memory, "BBBBBWWWBW[1][2]W*"),
    ("mJ", Family::Memory, "BBBBBWBWBW[1][13]W*"),
    ("mZ1", Family::Memory, "BBBBBWWBBW[1][10]W*"),
    ("mD1", Family::Memory, "BBBBBWBBBW[11][13]W*"),
];

fn parse_layout(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut chars = text.chars();
    while let Some(c) = chars.next() {
        match c {
            '*' => out.push(Token::Spacer),
            '[' => {
                let n: String = chars.by_ref().take_while(|&d| d != ']').collect();
                out.push(Token::Role(n.parse().expect("layout role index")));
            }
            _ => out.push(Token::Fixed(State::from_char(c).expect("layout symbol"))),
        }
    }
    out
}

pub fn kinds() -> Vec<Kind> {
    LAYOUTS.iter().map(|&(name, family, text)| Kind { name, family, tokens: parse_layout(text) }).collect()
}

pub fn kind(name: &str) -> Result<Kind, GenError> {
    kinds().into_iter().find(|k| k.name == name).ok_or_else(|| GenError::UnknownKind(name.to_string()))
}

impl Kind {
    /// The p = 13 slots copied by this kind, in layout order.
    pub fn roles(&self) -> Vec<usize> {
        self.tokens.iter().filter_map(|t| if let Token::Role(n) = t { Some(*n) } else { None }).collect()
    }

    /// Number of non-spacer positions, i.e. the smallest p the layout fits.
    pub fn width(&self) -> usize {
        self.tokens.iter().filter(|t| **t != Token::Spacer).count()
    }

    /// Instantiates the layout at `p`; `role(n)` supplies slot `n`, and
    /// `fixed` maps the fixed states into the output type.
    pub fn layout<T: Clone>(
        &self,
        p: usize,
        mut role: impl FnMut(usize) -> T,
        fixed: impl Fn(State) -> T,
    ) -> Result<Vec<T>, GenError> {
        if p < crate::MIN_GENERATED_P || p < self.width() {
            return Err(GenError::UnsupportedP(p));
        }
        let spacer = p - self.width();
        let mut out = Vec::with_capacity(p);
        for t in &self.tokens {
            match *t {
                Token::Fixed(s) => out.push(fixed(s)),
                Token::Role(n) => out.push(role(n)),
                Token::Spacer => out.extend(std::iter::repeat_n(fixed(State::W), spacer)),
            }
        }
        Ok(out)
    }

    /// Neighbourhood at `p` with the roles set to `roles` (layout order).
    pub fn context(&self, p: usize, roles: &[State]) -> Result<Vec<State>, GenError> {
        let slots = self.roles();
        if roles.len() != slots.len() {
            return Err(GenError::BadData {
                line: 0,
                msg: format!("kind {} takes {} role states, got {}", self.name, slots.len(), roles.len()),
            });
        }
        self.layout(p, |n| roles[slots.iter().position(|&s| s == n).unwrap()], |s| s)
    }
}
