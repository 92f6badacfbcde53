//! Neighbour arithmetic on coordinates, without building any map.
//!
//! Around a tile `ν` on ring `n+1`, counterclockwise from neighbour 1:
//!
//! ```text
//! f, [f-1], ν-1, [c1+1], sons of ν ..., [first son of ν+1], ν+1, [f+1]
//! ```
//!
//! where `f` is the father, `ν-1`/`ν+1` the previous/next tile on the same
//! ring (possibly in the adjacent sector) and `c1+1` the last son of `ν-1`.
//! The bracketed entries depend on the class of `ν`. Between two
//! consecutive tiles of a ring there is exactly one tile of the next ring
//! touching both (a "junction"); it is a son of one of them. The class of a
//! node says which of its two junctions it owns:
//!
//! | class | owns left junction | owns right junction | sons (classes)            |
//! |-------|--------------------|---------------------|---------------------------|
//! | `B`   | no                 | no                  | `R^(p-7) B L`             |
//! | `L`   | yes                | no                  | `M R^(p-7) B L`           |
//! | `R`   | no                 | yes                 | `R^(p-6) B M`             |
//! | `M`   | yes                | yes                 | `M R^(p-7) B M`           |
//!
//! `B` nodes are exactly the black nodes (the penultimate sons). `M` nodes
//! are the junctions themselves: they touch two tiles of the previous ring,
//! the extra one being `f-1` when `ν` is a first son and `f+1` when it is a
//! last son. Sector roots are `L` nodes. A black node is never a junction,
//! which is why its own list carries both `c1+1` and the first son of `ν+1`.
//!
//! The table was fixed by requiring the penultimate-black rule and the son
//! counts to agree with a ring-by-ring construction of the tiling; it is
//! checked tile by tile against [`crate::build_ball`] in the tests.

use crate::tree::{son_count, walk};
use crate::{CellCoord, NodeKind, TilingError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Neighbor {
    Cell(CellCoord),
    /// Beyond the radius of the ball being described.
    Boundary,
}

impl Neighbor {
    pub fn cell(&self) -> Option<&CellCoord> {
        match self {
            Neighbor::Cell(c) => Some(c),
            Neighbor::Boundary => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    B,
    L,
    R,
    M,
}

impl Class {
    fn owns_left(self) -> bool {
        matches!(self, Class::L | Class::M)
    }

    fn owns_right(self) -> bool {
        matches!(self, Class::R | Class::M)
    }

    fn son(self, j: usize, p: usize) -> Class {
        let k = if self == Class::B { p - 5 } else { p - 4 };
        if j + 1 == k {
            Class::B
        } else if j == k {
            if matches!(self, Class::B | Class::L) {
                Class::L
            } else {
                Class::M
            }
        } else if j == 1 && self.owns_left() {
            Class::M
        } else {
            Class::R
        }
    }
}

fn class_of(c: &CellCoord, p: usize) -> Class {
    c.path().iter().fold(Class::L, |cls, &j| cls.son(j, p))
}

fn sons(c: &CellCoord, p: usize) -> usize {
    if c.is_central() {
        p
    } else {
        son_count(walk(c.path(), p).kind, p)
    }
}

fn wrap(s: usize, delta: isize, p: usize) -> usize {
    ((s as isize - 1 + delta).rem_euclid(p as isize) + 1) as usize
}

/// Previous tile on the same ring, crossing into sector `s-1` if needed.
fn pred(c: &CellCoord, p: usize) -> CellCoord {
    let s = c.sector().expect("central tile has no ring neighbours");
    match c.path().split_last() {
        None => CellCoord::root(wrap(s, -1, p)),
        Some((&j, _)) if j > 1 => CellCoord::in_sector(s, with_last(c.path(), j - 1)),
        Some(_) => {
            let up = pred(&crate::father(c).unwrap(), p);
            let k = sons(&up, p);
            up.child(k)
        }
    }
}

/// Next tile on the same ring, crossing into sector `s+1` if needed.
fn succ(c: &CellCoord, p: usize) -> CellCoord {
    let s = c.sector().expect("central tile has no ring neighbours");
    match c.path().split_last() {
        None => CellCoord::root(wrap(s, 1, p)),
        Some((&j, parent)) => {
            let k = son_count(walk(parent, p).kind, p);
            if j < k {
                CellCoord::in_sector(s, with_last(c.path(), j + 1))
            } else {
                succ(&crate::father(c).unwrap(), p).child(1)
            }
        }
    }
}

fn with_last(path: &[usize], j: usize) -> Vec<usize> {
    let mut v = path.to_vec();
    *v.last_mut().unwrap() = j;
    v
}

/// The `p` neighbours of `c` in counterclockwise order, neighbour 1 being
/// the father (sector 1's root for the central tile). Tiles farther than
/// `radius` from the centre are reported as [`Neighbor::Boundary`].
pub fn neighbors(c: &CellCoord, p: usize, radius: usize) -> Result<Vec<Neighbor>, TilingError> {
    if p < 7 {
        return Err(TilingError::InvalidP(p));
    }
    if c.ring() > radius {
        return Err(TilingError::OutsideBall { cell: c.to_string(), radius });
    }
    if let Some(s) = c.sector() {
        if s > p {
            return Err(TilingError::BadCoord(c.to_string()));
        }
    }
    let keep = |x: CellCoord| {
        if x.ring() <= radius {
            Neighbor::Cell(x)
        } else {
            Neighbor::Boundary
        }
    };
    if c.is_central() {
        return Ok((1..=p).map(|s| keep(CellCoord::root(s))).collect());
    }
    let class = class_of(c, p);
    let f = match c.path() {
        [] => CellCoord::central(),
        _ => crate::father(c)?,
    };
    let last_index = c.path().last().copied();
    let k_here = sons(c, p);
    let (left, right) = (pred(c, p), succ(c, p));

    let mut out = Vec::with_capacity(p);
    out.push(keep(f.clone()));
    if class == Class::M && last_index == Some(1) {
        out.push(keep(pred(&f, p)));
    }
    out.push(keep(left.clone()));
    if !class.owns_left() {
        let k = sons(&left, p);
        out.push(keep(left.child(k)));
    }
    out.extend((1..=k_here).map(|j| keep(c.child(j))));
    if !class.owns_right() {
        out.push(keep(right.child(1)));
    }
    out.push(keep(right));
    if class == Class::M && last_index != Some(1) {
        out.push(keep(succ(&f, p)));
    }
    debug_assert_eq!(out.len(), p, "{c}");
    debug_assert!(class != Class::B || c.kind(p) == NodeKind::Black);
    Ok(out)
}
