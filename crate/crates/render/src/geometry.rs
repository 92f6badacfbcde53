use std::collections::VecDeque;
use std::f64::consts::PI;

use hypca_tiling::TilingBall;
use num_complex::Complex64;

use crate::{RenderError, MAX_RADIUS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Circles,
    Polygons,
}

/// Orientation-preserving isometry of the unit disk,
/// `z -> (a z + b) / (conj(b) z + conj(a))` with `|a|^2 - |b|^2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    a: Complex64,
    b: Complex64,
}

impl Isometry {
    pub fn identity() -> Self {
        Isometry { a: Complex64::new(1.0, 0.0), b: Complex64::new(0.0, 0.0) }
    }

    /// Rotation by `theta` about the origin.
    pub fn rotation(theta: f64) -> Self {
        Isometry { a: Complex64::from_polar(1.0, theta / 2.0), b: Complex64::new(0.0, 0.0) }
    }

    /// Translation along the real axis moving 0 to hyperbolic distance `d`.
    pub fn translation(d: f64) -> Self {
        Isometry { a: Complex64::new((d / 2.0).cosh(), 0.0), b: Complex64::new((d / 2.0).sinh(), 0.0) }
    }

    pub fn then(&self, inner: &Isometry) -> Isometry {
        // matrix product self * inner
        Isometry { a: self.a * inner.a + self.b * inner.b.conj(), b: self.a * inner.b + self.b * inner.a.conj() }
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b) / (self.b.conj() * z + self.a.conj())
    }

    /// Angle of the image of the direction 0 at the origin.
    pub fn angle(&self) -> f64 {
        // derivative at 0 is 1 / conj(a)^2
        (-2.0 * self.a.conj().arg()).rem_euclid(2.0 * PI)
    }
}

/// Hyperbolic distance in the Poincaré disk.
pub fn distance(z: Complex64, w: Complex64) -> f64 {
    let num = (z - w).norm_sqr();
    let den = (1.0 - z.norm_sqr()) * (1.0 - w.norm_sqr());
    (1.0 + 2.0 * num / den).acosh()
}

/// Tile positions of one ball.
#[derive(Debug, Clone)]
pub struct DiskLayout {
    pub p: usize,
    pub style: Style,
    pub isometries: Vec<Isometry>,
    /// Tile centres, strictly inside the unit disk.
    pub centers: Vec<Complex64>,
    /// Direction of each tile's slot 0, in radians.
    pub orientations: Vec<f64>,
    pub neighbors: Vec<Vec<Option<usize>>>,
    /// Hyperbolic inradius: half the distance between adjacent centres.
    pub inradius: f64,
    /// Hyperbolic circumradius (centre to vertex).
    pub circumradius: f64,
}

impl DiskLayout {
    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    /// Euclidean centre and radius of the inscribed circle of `tile`.
    pub fn circle(&self, tile: usize) -> (Complex64, f64) {
        let c = self.centers[tile];
        let rho = (self.inradius / 2.0).tanh();
        let k = 1.0 - rho * rho * c.norm_sqr();
        (c * (1.0 - rho * rho) / k, rho * (1.0 - c.norm_sqr()) / k)
    }

    /// Polygon vertices of `tile`, counterclockwise, vertex `j` between
    /// slots `j` and `j + 1`.
    pub fn vertices(&self, tile: usize) -> Vec<Complex64> {
        let r = (self.circumradius / 2.0).tanh();
        let g = &self.isometries[tile];
        (0..self.p).map(|j| g.apply(Complex64::from_polar(r, 2.0 * PI * (j as f64 + 0.5) / self.p as f64))).collect()
    }

    /// Adjacent pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, ns) in self.neighbors.iter().enumerate() {
            out.extend(ns.iter().flatten().filter(|&&j| i < j).map(|&j| (i, j)));
        }
        out
    }
}

/// Lays a ball out in the disk. Slot `k` of a tile points at angle
/// `orientation + 2 pi k / p`.
pub fn layout_ball(ball: &TilingBall, style: Style) -> Result<DiskLayout, RenderError> {
    if ball.radius() > MAX_RADIUS {
        return Err(RenderError::RadiusTooLarge(ball.radius()));
    }
    let p = ball.p();
    let step = 2.0 * PI / p as f64;
    let (s, c) = ((PI / p as f64).sin(), (PI / p as f64).cos());
    // right triangle centre / edge midpoint / vertex with angles pi/p, pi/3
    let inradius = (0.5 / s).acosh();
    let circumradius = (c / s / 3f64.sqrt()).acosh();
    let mut iso: Vec<Option<Isometry>> = vec![None; ball.len()];
    let mut queue = VecDeque::new();
    if !ball.is_empty() {
        iso[0] = Some(Isometry::identity());
        queue.push_back(0);
    }
    while let Some(t) = queue.pop_front() {
        let g = iso[t].unwrap();
        for (k, n) in ball.neighbors(t).iter().enumerate() {
            let Some(n) = *n else { continue };
            if iso[n].is_some() {
                continue;
            }
            let back = ball.neighbors(n).iter().position(|&x| x == Some(t)).expect("symmetric adjacency");
            let h = g
                .then(&Isometry::rotation(step * k as f64))
                .then(&Isometry::translation(2.0 * inradius))
                .then(&Isometry::rotation(PI - step * back as f64));
            iso[n] = Some(h);
            queue.push_back(n);
        }
    }
    let isometries: Vec<Isometry> = iso.into_iter().map(|g| g.expect("ball is connected")).collect();
    Ok(DiskLayout {
        p,
        style,
        centers: isometries.iter().map(|g| g.apply(Complex64::new(0.0, 0.0))).collect(),
        orientations: isometries.iter().map(Isometry::angle).collect(),
        isometries,
        neighbors: ball.ids().map(|i| ball.neighbors(i).to_vec()).collect(),
        inradius,
        circumradius,
    })
}

/// Largest gap between the Euclidean centre distance of two adjacent
/// inscribed circles and the sum of their radii.
pub fn tangency_residual(layout: &DiskLayout) -> f64 {
    layout
        .edges()
        .into_iter()
        .map(|(i, j)| {
            let (ci, ri) = layout.circle(i);
            let (cj, rj) = layout.circle(j);
            ((ci - cj).norm() - ri - rj).abs()
        })
        .fold(0.0, f64::max)
}
