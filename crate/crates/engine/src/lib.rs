//! Synchronous execution engine.
//!
//! Two substrates are supported. A [`TrackedRegion`] is a finite set of
//! named cells whose neighbour slots either point to another tracked cell
//! or hold a frozen state; this is how circuits are verified. A sparse
//! configuration lives on a [`TilingBall`](hypca_tiling::TilingBall) and
//! stores only black tiles.

mod embed;
mod error;
mod region;
mod run;
mod sparse;
mod trace;

pub use embed::{embed_region, region_from_ball, Embedding};
pub use error::EngineError;
pub use region::{RegionBuilder, Slot, SlotSpec, TrackedCell, TrackedRegion};
pub use run::{run, run_with, step, Injection};
pub use sparse::{run_sparse, step_sparse, SparseConfig};
pub use trace::{trace_diff, DiffEntry, Trace};
