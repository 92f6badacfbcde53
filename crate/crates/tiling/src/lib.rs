//! Structural model of the tilings {p,3}, p >= 7.
//!
//! Around a central tile the plane splits into `p` sectors, each spanned by
//! a tree whose nodes are the tiles of the sector. White nodes have `p-4`
//! sons, black nodes `p-5`, and the black son of any node is its
//! penultimate son. Level `n` of a sector tree is ring `n+1` around the
//! central tile.
//!
//! Two independent adjacency sources live here: [`neighbors`] computes a
//! tile's neighbours by arithmetic on its coordinate, and [`build_ball`]
//! grows a combinatorial map ring by ring. The map is the ground truth.

mod ball;
mod coord;
mod error;
mod fast;
mod tree;

pub use ball::{build_ball, TilingBall};
pub use coord::CellCoord;
pub use error::TilingError;
pub use fast::{neighbors, Neighbor};
pub use tree::{level_counts, node_kind, son_count, to_digits, NodeKind, TilingParams};

/// `father` is re-exported at the top level alongside the other tree operations.
pub use tree::father;
