use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use hypca_rulecore::State;
use num_complex::Complex64;

use crate::{DiskLayout, Style};

const SIZE: f64 = 800.0;
const DARK: &str = "#222222";
const LIGHT: &str = "#f4f1e8";
const HIGHLIGHT: &str = "#d0342c";

#[derive(Debug, Clone, Default)]
pub struct RenderOptions {
    /// Tiles outlined in a highlight colour, e.g. watched cells.
    pub highlight: BTreeSet<usize>,
    /// Optional caption drawn under the disk.
    pub title: Option<String>,
}

fn point(z: Complex64) -> (f64, f64) {
    let h = SIZE / 2.0;
    (h + z.re * (h - 10.0), h - z.im * (h - 10.0))
}

fn geodesic(a: Complex64, b: Complex64, samples: usize) -> Vec<Complex64> {
    // move a to the origin, where the geodesic is a diameter segment
    let to_origin = |z: Complex64| (z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z);
    let back = |w: Complex64| (w + a) / (Complex64::new(1.0, 0.0) + a.conj() * w);
    let b0 = to_origin(b);
    (0..samples).map(|i| back(b0 * (i as f64 / samples as f64))).collect()
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// SVG 1.1 picture of the layout. Black tiles are filled dark, all others
/// (including tiles missing from `states`) light.
pub fn render_svg(layout: &DiskLayout, states: &BTreeMap<usize, State>, options: &RenderOptions) -> String {
    let mut out = String::new();
    let extra = if options.title.is_some() { 30.0 } else { 0.0 };
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{}" viewBox="0 0 {SIZE} {}">"#,
        SIZE + extra,
        SIZE + extra
    )
    .unwrap();
    let (cx, cy) = point(Complex64::new(0.0, 0.0));
    writeln!(
        out,
        r#"  <circle cx="{cx}" cy="{cy}" r="{}" fill="white" stroke="black" stroke-width="1"/>"#,
        SIZE / 2.0 - 10.0
    )
    .unwrap();
    let scale = SIZE / 2.0 - 10.0;
    for tile in 0..layout.len() {
        let fill = if states.get(&tile).is_some_and(|s| s.is_black()) { DARK } else { LIGHT };
        let (stroke, width) = if options.highlight.contains(&tile) { (HIGHLIGHT, 2.0) } else { ("#777777", 0.5) };
        match layout.style {
            Style::Circles => {
                let (c, r) = layout.circle(tile);
                let (x, y) = point(c);
                writeln!(
                    out,
                    r#"  <circle id="t{tile}" cx="{x:.3}" cy="{y:.3}" r="{:.3}" fill="{fill}" stroke="{stroke}" stroke-width="{width}"/>"#,
                    r * scale
                )
                .unwrap();
            }
            Style::Polygons => {
                let v = layout.vertices(tile);
                let mut pts = Vec::new();
                for j in 0..v.len() {
                    pts.extend(geodesic(v[j], v[(j + 1) % v.len()], 8));
                }
                let pts: Vec<String> = pts
                    .into_iter()
                    .map(|z| {
                        let (x, y) = point(z);
                        format!("{x:.3},{y:.3}")
                    })
                    .collect();
                writeln!(
                    out,
                    r#"  <polygon id="t{tile}" points="{}" fill="{fill}" stroke="{stroke}" stroke-width="{width}"/>"#,
                    pts.join(" ")
                )
                .unwrap();
            }
        }
    }
    if let Some(title) = &options.title {
        writeln!(
            out,
            r#"  <text x="{cx}" y="{}" text-anchor="middle" font-family="sans-serif" font-size="16">{}</text>"#,
            SIZE + 20.0,
            escape(title)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
