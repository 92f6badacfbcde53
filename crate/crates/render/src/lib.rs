//! Poincaré-disk pictures of tiling balls.
//!
//! Every tile gets a disk isometry mapping the central tile onto it, built
//! by composing rotations and one translation per step along a
//! breadth-first path. Two styles are drawn from it: the inscribed circle of
//! each tile (neighbouring circles touch at edge midpoints) and the
//! geodesic polygon itself.

mod geometry;
mod svg;

pub use geometry::{distance, layout_ball, tangency_residual, DiskLayout, Isometry, Style};
pub use svg::{render_svg, RenderOptions};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RenderError {
    #[error("radius {0} is too large to draw (at most 5)")]
    RadiusTooLarge(usize),
}

/// Largest ball radius drawn; beyond it tiles shrink below a pixel.
pub const MAX_RADIUS: usize = 5;
