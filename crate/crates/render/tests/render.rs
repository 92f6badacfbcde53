use std::collections::BTreeMap;

use approx::assert_abs_diff_eq;
use hypca_render::*;
use hypca_rulecore::State;
use hypca_tiling::build_ball;
use num_complex::Complex64;

#[test]
fn radius_zero_is_one_centered_tile() {
    let layout = layout_ball(&build_ball(7, 0).unwrap(), Style::Circles).unwrap();
    assert_eq!(layout.len(), 1);
    assert_abs_diff_eq!(layout.centers[0].norm(), 0.0);
}

#[test]
fn thirteen_circles_touch_the_central_one() {
    let layout = layout_ball(&build_ball(13, 1).unwrap(), Style::Circles).unwrap();
    assert_eq!(layout.len(), 14);
    let (c0, r0) = layout.circle(0);
    for t in 1..14 {
        let (c, r) = layout.circle(t);
        assert_abs_diff_eq!((c - c0).norm(), r + r0, epsilon = 1e-9);
    }
}

#[test]
fn adjacent_circles_are_tangent_at_radius_two() {
    for p in [7, 13] {
        let layout = layout_ball(&build_ball(p, 2).unwrap(), Style::Circles).unwrap();
        let res = tangency_residual(&layout);
        assert!(res < 1e-6, "p={p}: residual {res}");
    }
}

#[test]
fn adjacent_centres_are_equidistant() {
    for (p, radius) in [(7, 4), (13, 3), (17, 2)] {
        let layout = layout_ball(&build_ball(p, radius).unwrap(), Style::Polygons).unwrap();
        // independent value: cosh(d) for the {p,3} edge-sharing centres
        let s = (std::f64::consts::PI / p as f64).sin();
        let expected = (2.0 * (0.5 / s).acosh()).cosh();
        for (i, j) in layout.edges() {
            let d = distance(layout.centers[i], layout.centers[j]);
            assert!((d.cosh() - expected).abs() / expected < 1e-9, "p={p} tiles {i},{j}: {d}");
        }
        assert!(layout.centers.iter().all(|c| c.norm() < 1.0));
    }
}

#[test]
fn neighbouring_polygons_share_an_edge() {
    let layout = layout_ball(&build_ball(7, 3).unwrap(), Style::Polygons).unwrap();
    for (i, j) in layout.edges() {
        let vi = layout.vertices(i);
        let vj = layout.vertices(j);
        let shared = vi.iter().filter(|a| vj.iter().any(|b| (*a - *b).norm() < 1e-9)).count();
        assert_eq!(shared, 2, "tiles {i} and {j}");
    }
}

#[test]
fn isometries_compose_like_matrices() {
    let g = Isometry::rotation(0.7).then(&Isometry::translation(1.3));
    let z = Complex64::new(0.2, -0.1);
    let direct = Isometry::rotation(0.7).apply(Isometry::translation(1.3).apply(z));
    assert_abs_diff_eq!((g.apply(z) - direct).norm(), 0.0, epsilon = 1e-12);
    assert_abs_diff_eq!(
        distance(Complex64::new(0.0, 0.0), Isometry::translation(1.3).apply(Complex64::new(0.0, 0.0))),
        1.3,
        epsilon = 1e-12
    );
}

#[test]
fn too_large_radius_is_refused() {
    let ball = build_ball(7, 6).unwrap();
    assert_eq!(layout_ball(&ball, Style::Circles).unwrap_err(), RenderError::RadiusTooLarge(6));
}

#[test]
fn svg_is_well_formed_and_coloured() {
    for style in [Style::Circles, Style::Polygons] {
        let layout = layout_ball(&build_ball(13, 2).unwrap(), style).unwrap();
        let empty = render_svg(&layout, &BTreeMap::new(), &RenderOptions::default());
        let doc = roxmltree::Document::parse(&empty).unwrap();
        let tiles: Vec<_> =
            doc.descendants().filter(|n| n.attribute("id").is_some_and(|i| i.starts_with('t'))).collect();
        assert_eq!(tiles.len(), layout.len());
        let fills: std::collections::BTreeSet<_> = tiles.iter().map(|n| n.attribute("fill").unwrap()).collect();
        assert_eq!(fills.len(), 1, "empty states must be uniformly light");

        let states = BTreeMap::from([(0, State::B), (3, State::W)]);
        let opts = RenderOptions { highlight: [3].into(), title: Some("a < b & c".into()) };
        let svg = render_svg(&layout, &states, &opts);
        let doc = roxmltree::Document::parse(&svg).unwrap();
        let fill_of = |id: &str| {
            doc.descendants().find(|n| n.attribute("id") == Some(id)).unwrap().attribute("fill").unwrap().to_string()
        };
        assert_ne!(fill_of("t0"), fill_of("t3"));
        assert_eq!(fill_of("t3"), fill_of("t5"));
        assert_eq!(svg, render_svg(&layout, &states, &opts), "rendering is deterministic");
    }
}
