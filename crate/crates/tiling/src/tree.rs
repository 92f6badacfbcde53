use crate::{CellCoord, TilingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TilingParams {
    p: usize,
}

impl TilingParams {
    pub fn new(p: usize) -> Result<Self, TilingError> {
        if p < 7 {
            return Err(TilingError::InvalidP(p));
        }
        Ok(TilingParams { p })
    }

    pub fn p(&self) -> usize {
        self.p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    White,
    Black,
}

pub fn son_count(kind: NodeKind, p: usize) -> usize {
    match kind {
        NodeKind::White => p - 4,
        NodeKind::Black => p - 5,
    }
}

/// Number of nodes on level `n` of one sector tree.
///
/// Expanded from the son counts: a white node has one black son and `p-5`
/// white ones, a black node one black son and `p-6` white ones.
pub fn level_counts(p: usize, n: usize) -> u128 {
    let (mut w, mut b) = (1u128, 0u128);
    let p = p as u128;
    for _ in 0..n {
        (w, b) = ((p - 5) * w + (p - 6) * b, w + b);
    }
    w + b
}

/// Nodes on levels `0..n` of one sector tree (i.e. the number of the first
/// node of level `n`, minus one).
pub(crate) fn nodes_before_level(p: usize, n: usize) -> u128 {
    (0..n).map(|i| level_counts(p, i)).sum()
}

/// Position of a node on its level, as produced by walking its path.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LevelPos {
    /// 1-based ordinal within the level of its sector tree.
    pub ordinal: u128,
    /// Black nodes strictly before this one on the same level.
    pub blacks_before: u128,
    pub kind: NodeKind,
}

pub(crate) fn root_pos() -> LevelPos {
    LevelPos { ordinal: 1, blacks_before: 0, kind: NodeKind::White }
}

/// Ordinal of the first son of the node at `pos`: every earlier node on the
/// level contributes `p-4` sons, minus one per earlier black node.
pub(crate) fn first_son_ordinal(pos: &LevelPos, p: usize) -> u128 {
    1 + (p as u128 - 4) * (pos.ordinal - 1) - pos.blacks_before
}

pub(crate) fn child_pos(pos: &LevelPos, j: usize, p: usize) -> LevelPos {
    let k = son_count(pos.kind, p);
    LevelPos {
        ordinal: first_son_ordinal(pos, p) + j as u128 - 1,
        // one black son per earlier node, plus our own black son if j is last
        blacks_before: pos.ordinal - 1 + u128::from(j == k),
        kind: if j + 1 == k { NodeKind::Black } else { NodeKind::White },
    }
}

pub(crate) fn walk(path: &[usize], p: usize) -> LevelPos {
    path.iter().fold(root_pos(), |pos, &j| child_pos(&pos, j, p))
}

pub fn node_kind(c: &CellCoord, p: usize) -> NodeKind {
    match (c.sector(), c.path()) {
        (None, _) | (Some(_), []) => NodeKind::White,
        (Some(_), path) => {
            let (&j, parent) = path.split_last().unwrap();
            let k = son_count(walk(parent, p).kind, p);
            if j + 1 == k {
                NodeKind::Black
            } else {
                NodeKind::White
            }
        }
    }
}

/// Digit basis: 1, then the level sizes of a sector tree.
pub(crate) fn basis(p: usize, len: usize) -> Vec<u128> {
    (0..len).map(|i| level_counts(p, i)).collect()
}

/// Greedy (lexicographically largest, hence maximal-length) representation
/// of `n` over the level-size basis, most significant digit first.
pub(crate) fn digits_of_number(n: u128, p: usize) -> Vec<u32> {
    assert!(n >= 1);
    let mut len = 1;
    while level_counts(p, len) <= n {
        len += 1;
    }
    let b = basis(p, len);
    let mut rest = n;
    let mut out = Vec::with_capacity(len);
    for i in (0..len).rev() {
        let d = rest / b[i];
        rest -= d * b[i];
        out.push(d as u32);
    }
    out
}

pub(crate) fn number_of_digits(digits: &[u32], p: usize) -> u128 {
    let b = basis(p, digits.len());
    digits.iter().rev().zip(&b).map(|(&d, &w)| d as u128 * w).sum()
}

pub fn to_digits(c: &CellCoord, p: usize) -> Result<Vec<u32>, TilingError> {
    let n = c.number(p).ok_or_else(|| TilingError::BadCoord("the central tile has no sector number".into()))?;
    Ok(digits_of_number(n, p))
}

pub fn father(c: &CellCoord) -> Result<CellCoord, TilingError> {
    match (c.sector(), c.path()) {
        (Some(s), path) if !path.is_empty() => Ok(CellCoord::in_sector(s, path[..path.len() - 1].to_vec())),
        _ => Err(TilingError::NoFather(c.to_string())),
    }
}
