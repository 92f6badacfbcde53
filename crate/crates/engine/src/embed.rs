//! Placing a tracked region on a tiling ball.
//!
//! A placement maps every tracked cell to a tile and fixes a rotation so
//! that slot `i` of the cell is the tile's neighbour `i + r`. Every
//! reference must land on the referenced cell's tile, no two cells may
//! share a tile, and a frozen slot may not land on a tracked tile or on a
//! tile another cell freezes to the opposite state. The frozen black
//! slots then become permanent black tiles of the sparse configuration.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap, VecDeque};

use hypca_rulecore::State;
use hypca_tiling::{CellCoord, TilingBall};

use crate::{EngineError, RegionBuilder, Slot, SlotSpec, SparseConfig, TrackedRegion};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    /// Tile of each tracked cell.
    pub tiles: Vec<usize>,
    /// Rotation of each tracked cell.
    pub rotations: Vec<usize>,
    /// Initial configuration: tracked cells and frozen black slots.
    pub config: SparseConfig,
    /// Tile of each tracked cell, by name.
    pub names: BTreeMap<String, CellCoord>,
}

#[derive(Clone, Default)]
struct Partial {
    tile: Vec<Option<usize>>,
    rot: Vec<usize>,
    occupied: HashMap<usize, usize>,
    env: HashMap<usize, State>,
}

struct Search<'a> {
    region: &'a TrackedRegion,
    ball: &'a TilingBall,
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    deepest: RefCell<(usize, String)>,
}

impl Search<'_> {
    fn name(&self, c: usize) -> &str {
        &self.region.cell(c).name
    }

    fn fail(&self, depth: usize, msg: impl FnOnce() -> String) {
        let mut deepest = self.deepest.borrow_mut();
        if depth >= deepest.0 {
            *deepest = (depth, msg());
        }
    }

    /// Checks and records cell `c` at (tile, rot) against the placed cells.
    fn place(&self, st: &Partial, depth: usize, c: usize, tile: usize, rot: usize) -> Option<Partial> {
        let p = self.region.p();
        if !self.ball.is_interior(tile) {
            self.fail(depth, || format!("{} would sit on the ball frontier", self.name(c)));
            return None;
        }
        if let Some(&other) = st.occupied.get(&tile) {
            self.fail(depth, || format!("{} and {} would share a tile", self.name(c), self.name(other)));
            return None;
        }
        if st.env.contains_key(&tile) {
            self.fail(depth, || format!("{} lands on a tile another cell sees as frozen", self.name(c)));
            return None;
        }
        let mut next = st.clone();
        next.tile[c] = Some(tile);
        next.rot[c] = rot;
        next.occupied.insert(tile, c);
        let nbrs = self.ball.neighbors(tile);
        for (j, slot) in self.region.cell(c).slots.iter().enumerate() {
            let Some(t) = nbrs[(j + rot) % p] else {
                self.fail(depth, || format!("slot {} of {} leaves the ball", j + 1, self.name(c)));
                return None;
            };
            match *slot {
                Slot::Ref(d) => match next.tile[d] {
                    Some(td) if td != t => {
                        self.fail(depth, || {
                            format!("slot {} of {} cannot reach {}", j + 1, self.name(c), self.name(d))
                        });
                        return None;
                    }
                    Some(_) => {}
                    None => {
                        if let Some(&o) = next.occupied.get(&t) {
                            self.fail(depth, || {
                                format!(
                                    "slot {} of {} should be {} but is {}",
                                    j + 1,
                                    self.name(c),
                                    self.name(d),
                                    self.name(o)
                                )
                            });
                            return None;
                        }
                    }
                },
                Slot::Env(s) => {
                    if let Some(&o) = next.occupied.get(&t) {
                        self.fail(depth, || {
                            format!("frozen slot {} of {} is the tile of {}", j + 1, self.name(c), self.name(o))
                        });
                        return None;
                    }
                    // black milestones are simulated too, so they need a full neighbourhood
                    if s == State::B && !self.ball.is_interior(t) {
                        self.fail(depth, || {
                            format!("black slot {} of {} would sit on the ball frontier", j + 1, self.name(c))
                        });
                        return None;
                    }
                    if *next.env.entry(t).or_insert(s) != s {
                        self.fail(depth, || format!("slot {} of {} is frozen both W and B", j + 1, self.name(c)));
                        return None;
                    }
                }
            }
        }
        // placed cells that reference c must see it on the right side
        for (d, cell) in self.region.cells().iter().enumerate() {
            let Some(td) = next.tile[d] else { continue };
            if d == c {
                continue;
            }
            let dn = self.ball.neighbors(td);
            for (i, slot) in cell.slots.iter().enumerate() {
                let target = dn[(i + next.rot[d]) % p];
                let bad = match *slot {
                    Slot::Ref(x) if x == c => target != Some(tile),
                    Slot::Ref(_) => false,
                    Slot::Env(_) => target == Some(tile),
                };
                if bad {
                    self.fail(depth, || format!("slot {} of {} disagrees with {}", i + 1, self.name(d), self.name(c)));
                    return None;
                }
            }
        }
        Some(next)
    }

    fn solve(&self, st: &Partial, depth: usize) -> Option<Partial> {
        if depth == self.order.len() {
            return Some(st.clone());
        }
        let p = self.region.p();
        let c = self.order[depth];
        let mut options = Vec::new();
        match self.parent[c] {
            None => {
                let centre = self.ball.id_of(&CellCoord::central()).expect("ball has a centre");
                options.extend((0..p).map(|r| (centre, r)));
            }
            Some(par) => {
                let (tp, rp) = (st.tile[par].expect("parent placed"), st.rot[par]);
                let pn = self.ball.neighbors(tp);
                let from_parent: Vec<usize> = self
                    .region
                    .cell(par)
                    .slots
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| **s == Slot::Ref(c))
                    .filter_map(|(i, _)| pn[(i + rp) % p])
                    .collect();
                let tiles: Vec<usize> = match from_parent.first() {
                    Some(&t) => vec![t],
                    None => pn.iter().flatten().copied().collect(),
                };
                let back: Vec<usize> = self
                    .region
                    .cell(c)
                    .slots
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| **s == Slot::Ref(par))
                    .map(|(j, _)| j)
                    .collect();
                for t in tiles {
                    let Some(at) = self.ball.neighbors(t).iter().position(|&n| n == Some(tp)) else { continue };
                    if back.is_empty() {
                        options.extend((0..p).map(|r| (t, r)));
                    } else {
                        options.extend(back.iter().map(|&j| (t, (at + p - j) % p)));
                    }
                }
            }
        }
        for (t, r) in options {
            if let Some(next) = self.place(st, depth, c, t, r) {
                if let Some(done) = self.solve(&next, depth + 1) {
                    return Some(done);
                }
            }
        }
        None
    }
}

/// Finds a placement of `region` in `ball`, or explains why none exists.
/// The cell closest to the middle of the region (smallest reference-graph
/// eccentricity, first in order on ties) goes on the central tile.
pub fn embed_region(region: &TrackedRegion, ball: &TilingBall) -> Result<Embedding, EngineError> {
    if region.p() != ball.p() {
        return Err(EngineError::NotEmbeddable(format!("region is for p={}, ball for p={}", region.p(), ball.p())));
    }
    if region.is_empty() {
        return Err(EngineError::NotEmbeddable("empty region".into()));
    }
    // breadth-first order over references in either direction
    let n = region.len();
    let mut adj = vec![Vec::new(); n];
    for (i, c) in region.cells().iter().enumerate() {
        for s in &c.slots {
            if let Slot::Ref(j) = *s {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let bfs = |root: usize| {
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut depth = vec![0; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(c) = queue.pop_front() {
            order.push(c);
            for &d in &adj[c] {
                if !seen[d] {
                    seen[d] = true;
                    parent[d] = Some(c);
                    depth[d] = depth[c] + 1;
                    queue.push_back(d);
                }
            }
        }
        let reach = depth.into_iter().max().unwrap_or(0);
        (order, parent, reach)
    };
    // the most central cell goes on the central tile, leaving the most room
    let root = (0..n).min_by_key(|&c| bfs(c).2).expect("non-empty region");
    let (order, parent, _) = bfs(root);
    if order.len() != n {
        return Err(EngineError::NotEmbeddable("region is not connected".into()));
    }
    let start = Partial { tile: vec![None; n], rot: vec![0; n], ..Default::default() };
    let search = Search { region, ball, order, parent, deepest: RefCell::new((0, String::new())) };
    let Some(done) = search.solve(&start, 0) else {
        return Err(EngineError::NotEmbeddable(search.deepest.into_inner().1));
    };
    let tiles: Vec<usize> = done.tile.iter().map(|t| t.expect("all placed")).collect();
    let mut config = SparseConfig::new();
    for (&t, &s) in &done.env {
        if s == State::B {
            config.insert(ball.coord(t).clone(), s);
        }
    }
    let mut names = BTreeMap::new();
    for (c, &t) in tiles.iter().enumerate() {
        let coord = ball.coord(t).clone();
        if region.state(c) == State::B {
            config.insert(coord.clone(), State::B);
        }
        names.insert(region.cell(c).name.clone(), coord);
    }
    Ok(Embedding { tiles, rotations: done.rot, config, names })
}

/// Tracked region over the given interior tiles of `ball`: neighbours in
/// the set are references, the others are frozen at their state in
/// `config`. Cells are named by their tile labels.
pub fn region_from_ball(ball: &TilingBall, config: &SparseConfig, ids: &[usize]) -> Result<TrackedRegion, EngineError> {
    let p = ball.p();
    let inside: HashMap<usize, String> = ids.iter().map(|&id| (id, ball.coord(id).label(p))).collect();
    let state_of = |id: usize| config.get(ball.coord(id)).copied().unwrap_or(State::W);
    let mut b = RegionBuilder::new(p);
    for &id in ids {
        let slots = ball
            .neighbors(id)
            .iter()
            .map(|n| match n {
                Some(t) => match inside.get(t) {
                    Some(name) => SlotSpec::Ref(name.clone()),
                    None => SlotSpec::Env(state_of(*t)),
                },
                None => SlotSpec::Env(State::W),
            })
            .collect();
        b.cell(inside[&id].clone(), state_of(id), slots);
    }
    b.build()
}
