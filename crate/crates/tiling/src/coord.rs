use std::fmt;

use crate::tree::{self, digits_of_number, nodes_before_level, number_of_digits, son_count, walk, LevelPos};
use crate::{NodeKind, TilingError};

/// Address of a tile: the central tile, or a sector (1-based) plus the path
/// of 1-based son indices from the sector root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellCoord {
    sector: Option<usize>,
    path: Vec<usize>,
}

impl CellCoord {
    pub fn central() -> Self {
        CellCoord { sector: None, path: Vec::new() }
    }

    pub fn root(sector: usize) -> Self {
        Self::in_sector(sector, Vec::new())
    }

    pub fn in_sector(sector: usize, path: Vec<usize>) -> Self {
        assert!(sector >= 1, "sectors are numbered from 1");
        CellCoord { sector: Some(sector), path }
    }

    /// Checked constructor: every path index must respect the son counts.
    pub fn new(sector: usize, path: Vec<usize>, p: usize) -> Result<Self, TilingError> {
        if sector == 0 || sector > p {
            return Err(TilingError::BadCoord(format!("sector {sector} out of 1..={p}")));
        }
        let mut pos = tree::root_pos();
        for &j in &path {
            let k = son_count(pos.kind, p);
            if j == 0 || j > k {
                return Err(TilingError::BadCoord(format!("son index {j} out of 1..={k}")));
            }
            pos = tree::child_pos(&pos, j, p);
        }
        Ok(Self::in_sector(sector, path))
    }

    pub fn is_central(&self) -> bool {
        self.sector.is_none()
    }

    pub fn sector(&self) -> Option<usize> {
        self.sector
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    /// Tree level (0 for sector roots). The central tile has no level.
    pub fn level(&self) -> Option<usize> {
        self.sector.map(|_| self.path.len())
    }

    /// Distance in tiles from the central tile.
    pub fn ring(&self) -> usize {
        if self.is_central() {
            0
        } else {
            self.path.len() + 1
        }
    }

    pub fn child(&self, j: usize) -> CellCoord {
        let mut path = self.path.clone();
        path.push(j);
        CellCoord { sector: self.sector, path }
    }

    pub(crate) fn pos(&self, p: usize) -> LevelPos {
        walk(&self.path, p)
    }

    pub fn kind(&self, p: usize) -> NodeKind {
        tree::node_kind(self, p)
    }

    /// 1-based ordinal on its level of the sector tree.
    pub fn ordinal(&self, p: usize) -> Option<u128> {
        self.sector.map(|_| self.pos(p).ordinal)
    }

    /// 1-based breadth-first number in the sector tree (root = 1).
    pub fn number(&self, p: usize) -> Option<u128> {
        self.sector.map(|_| nodes_before_level(p, self.path.len()) + self.pos(p).ordinal)
    }

    pub fn digits(&self, p: usize) -> Option<Vec<u32>> {
        self.number(p).map(|n| digits_of_number(n, p))
    }

    /// Inverse of [`CellCoord::number`].
    pub fn from_number(sector: usize, number: u128, p: usize) -> Result<Self, TilingError> {
        if number == 0 || sector == 0 || sector > p {
            return Err(TilingError::BadCoord(format!("s{sector}.{number}")));
        }
        let mut level = 0;
        while nodes_before_level(p, level + 1) < number {
            level += 1;
        }
        let target = number - nodes_before_level(p, level);
        // descend, picking the last son whose leftmost descendant on the
        // target level is not past the target
        let mut path = Vec::with_capacity(level);
        let mut pos = tree::root_pos();
        for depth in 0..level {
            let k = son_count(pos.kind, p);
            let mut chosen = 1;
            for j in 1..=k {
                let mut probe = tree::child_pos(&pos, j, p);
                for _ in depth + 1..level {
                    probe = tree::child_pos(&probe, 1, p);
                }
                if probe.ordinal <= target {
                    chosen = j;
                } else {
                    break;
                }
            }
            path.push(chosen);
            pos = tree::child_pos(&pos, chosen, p);
        }
        debug_assert_eq!(pos.ordinal, target);
        Ok(Self::in_sector(sector, path))
    }

    /// Inverse of [`CellCoord::digits`].
    pub fn from_digits(sector: usize, digits: &[u32], p: usize) -> Result<Self, TilingError> {
        Self::from_number(sector, number_of_digits(digits, p), p)
    }

    /// `C` or `s<sector>.<number>`.
    pub fn label(&self, p: usize) -> String {
        match self.sector {
            None => "C".to_string(),
            Some(s) => format!("s{s}.{}", self.number(p).unwrap()),
        }
    }

    /// Parses `C`, `s<sector>.<number>` or `s<sector>:<i>.<j>...` (path form;
    /// `s<sector>:` alone is the sector root).
    pub fn parse(spec: &str, p: usize) -> Result<Self, TilingError> {
        let bad = || TilingError::BadCoord(spec.to_string());
        let spec = spec.trim();
        if spec == "C" {
            return Ok(Self::central());
        }
        let rest = spec.strip_prefix('s').ok_or_else(bad)?;
        if let Some((sector, path)) = rest.split_once(':') {
            let sector = sector.parse().map_err(|_| bad())?;
            let path = if path.is_empty() {
                Vec::new()
            } else {
                path.split('.').map(|x| x.parse().map_err(|_| bad())).collect::<Result<Vec<usize>, _>>()?
            };
            return Self::new(sector, path, p);
        }
        let (sector, number) = rest.split_once('.').ok_or_else(bad)?;
        Self::from_number(sector.parse().map_err(|_| bad())?, number.parse().map_err(|_| bad())?, p)
    }
}

/// Path form, independent of `p`: `C` or `s<sector>:<i>.<j>...`.
impl fmt::Display for CellCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sector {
            None => write!(f, "C"),
            Some(s) => {
                write!(f, "s{s}:")?;
                let parts: Vec<String> = self.path.iter().map(|j| j.to_string()).collect();
                write!(f, "{}", parts.join("."))
            }
        }
    }
}
