//! Combinatorial-map construction of a ball of the tiling {p,3}.
//!
//! The ball is grown ring by ring. The boundary of the current disk is a
//! cycle of edges; each boundary vertex touches one or two tiles. A vertex
//! touching one tile still needs two more, so a new edge leaves it outwards;
//! a vertex touching two tiles is closed by a single new tile. Each new tile
//! therefore covers the boundary stretch between two consecutive
//! one-tile vertices, plus the two outgoing edges, plus `p - m - 2` fresh
//! outer edges when the stretch has `m` edges. Every interior vertex ends up
//! shared by exactly three tiles.
//!
//! Coordinates are attached afterwards from the tree definition alone (son
//! counts and the penultimate black son), by finding the one alignment of
//! the son lists along each ring for which every son touches its father.

use std::collections::HashMap;

use crate::tree::son_count;
use crate::{CellCoord, NodeKind, TilingError};

#[derive(Debug, Clone)]
pub struct TilingBall {
    p: usize,
    radius: usize,
    coords: Vec<CellCoord>,
    rings: Vec<usize>,
    /// Counterclockwise neighbour lists, entry 0 being the father (sector
    /// 1's root for the central tile). `None` marks the outside of the ball.
    adj: Vec<Vec<Option<usize>>>,
    index: HashMap<CellCoord, usize>,
}

impl TilingBall {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coord(&self, id: usize) -> &CellCoord {
        &self.coords[id]
    }

    pub fn ring(&self, id: usize) -> usize {
        self.rings[id]
    }

    pub fn id_of(&self, c: &CellCoord) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn neighbors(&self, id: usize) -> &[Option<usize>] {
        &self.adj[id]
    }

    /// Tiles whose neighbours all lie in the ball.
    pub fn is_interior(&self, id: usize) -> bool {
        self.rings[id] < self.radius
    }

    /// Number of tiles on each ring `0..=radius`.
    pub fn ring_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.radius + 1];
        for &r in &self.rings {
            sizes[r] += 1;
        }
        sizes
    }

    pub fn ids(&self) -> std::ops::Range<usize> {
        0..self.coords.len()
    }

    /// Text adjacency list: `id: n1 n2 ... np`, `-` for the outside.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for id in self.ids() {
            out.push_str(&self.coords[id].label(self.p));
            out.push(':');
            for n in &self.adj[id] {
                out.push(' ');
                match n {
                    Some(t) => out.push_str(&self.coords[*t].label(self.p)),
                    None => out.push('-'),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Edge of the current boundary, owned by `tile` at side `slot`.
#[derive(Clone, Copy)]
struct BoundaryEdge {
    tile: usize,
    slot: usize,
    /// Tiles touching the edge's starting vertex.
    start_count: u8,
}

pub fn build_ball(p: usize, radius: usize) -> Result<TilingBall, TilingError> {
    if p < 7 {
        return Err(TilingError::InvalidP(p));
    }
    // raw map: slots in counterclockwise order, arbitrary starting side
    let mut adj: Vec<Vec<Option<usize>>> = vec![vec![None; p]];
    let mut rings = vec![0usize];
    let mut boundary: Vec<BoundaryEdge> = (0..p).map(|slot| BoundaryEdge { tile: 0, slot, start_count: 1 }).collect();
    // creation order of each ring, which runs counterclockwise
    let mut ring_tiles: Vec<Vec<usize>> = vec![vec![0]];

    for ring in 1..=radius {
        let opens: Vec<usize> = (0..boundary.len()).filter(|&i| boundary[i].start_count == 1).collect();
        let first_new = adj.len();
        let count = opens.len();
        let mut next_boundary = Vec::new();
        for (n, &a) in opens.iter().enumerate() {
            let b = opens[(n + 1) % count];
            let stretch: Vec<BoundaryEdge> = if b > a {
                boundary[a..b].to_vec()
            } else {
                boundary[a..].iter().chain(&boundary[..b]).copied().collect()
            };
            let m = stretch.len();
            let me = first_new + n;
            let prev = first_new + (n + count - 1) % count;
            let next = first_new + (n + 1) % count;
            let mut slots = vec![None; p];
            // the shared stretch is walked backwards from our side
            for (i, e) in stretch.iter().rev().enumerate() {
                slots[i] = Some(e.tile);
                adj[e.tile][e.slot] = Some(me);
            }
            slots[m] = Some(prev);
            slots[p - 1] = Some(next);
            adj.push(slots);
            rings.push(ring);
            for (i, slot) in (m + 1..p - 1).enumerate() {
                next_boundary.push(BoundaryEdge { tile: me, slot, start_count: if i == 0 { 2 } else { 1 } });
            }
        }
        ring_tiles.push((first_new..first_new + count).collect());
        boundary = next_boundary;
    }

    let coords = label(p, &adj, &ring_tiles)?;
    // rotate every list so that it starts with the father
    let mut index = HashMap::with_capacity(coords.len());
    for (id, c) in coords.iter().enumerate() {
        index.insert(c.clone(), id);
    }
    let mut rotated = Vec::with_capacity(adj.len());
    for (id, c) in coords.iter().enumerate() {
        let anchor = if c.is_central() {
            match index.get(&CellCoord::root(1)) {
                Some(&r) => r,
                None => {
                    rotated.push(adj[id].clone());
                    continue;
                }
            }
        } else if c.path().is_empty() {
            0
        } else {
            index[&crate::father(c)?]
        };
        let at = adj[id].iter().position(|&n| n == Some(anchor)).expect("father is adjacent");
        let mut v = adj[id][at..].to_vec();
        v.extend_from_slice(&adj[id][..at]);
        rotated.push(v);
    }
    Ok(TilingBall { p, radius, coords, rings, adj: rotated, index })
}

/// Attaches sector-tree coordinates to the raw map.
fn label(p: usize, adj: &[Vec<Option<usize>>], rings: &[Vec<usize>]) -> Result<Vec<CellCoord>, TilingError> {
    let mut coords = vec![CellCoord::central(); adj.len()];
    let mut kinds = vec![NodeKind::White; adj.len()];
    let Some(first_ring) = rings.get(1) else {
        return Ok(coords);
    };
    // ring 1 in creation order follows the central tile's sides
    for (s, &t) in first_ring.iter().enumerate() {
        coords[t] = CellCoord::root(s + 1);
    }
    let mut level: Vec<usize> = first_ring.clone();
    for next in rings.iter().skip(2) {
        let touches = |a: usize, b: usize| adj[a].contains(&Some(b));
        let (father0, last) = (level[0], level[level.len() - 1]);
        // sector roots own the junction tile on their left, so the first son
        // of the level's first node also touches the level's last node
        let candidates: Vec<usize> =
            (0..next.len()).filter(|&o| touches(next[o], father0) && touches(next[o], last)).collect();
        let mut found = None;
        'offsets: for offset in candidates {
            let mut at = offset;
            let mut assignment = Vec::with_capacity(next.len());
            for &f in &level {
                let k = son_count(kinds[f], p);
                for j in 1..=k {
                    let t = next[at % next.len()];
                    if !touches(t, f) {
                        continue 'offsets;
                    }
                    assignment.push((t, f, j, k));
                    at += 1;
                }
            }
            if at - offset != next.len() {
                return Err(TilingError::BadCoord("son counts do not cover the ring".into()));
            }
            if found.replace((offset, assignment)).is_some() {
                return Err(TilingError::BadCoord("ambiguous sector-tree alignment".into()));
            }
        }
        let (offset, assignment) = found.ok_or_else(|| TilingError::BadCoord("no sector-tree alignment".into()))?;
        for &(t, f, j, k) in &assignment {
            coords[t] = coords[f].child(j);
            kinds[t] = if j + 1 == k { NodeKind::Black } else { NodeKind::White };
        }
        level = (0..next.len()).map(|i| next[(offset + i) % next.len()]).collect();
    }
    Ok(coords)
}
