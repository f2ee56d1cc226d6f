//! SVG rendering of tilings, optionally with a light/dark coloring.

use std::fmt::Write;

use crate::bott_samelson::{Coloring, Shade};
use crate::error::{Error, Result};
use crate::io::geometry::{Point, PolygonGeometry};
use crate::tilings::{boundary_vertices, BoundaryVertex, RhombicTiling};
use crate::zonotopal::ZonoTiling;

#[derive(Debug, Clone)]
pub struct RenderSpec {
    /// Pixels per unit edge.
    pub scale: f64,
    pub show_vertex_labels: bool,
    pub coloring: Option<Coloring>,
    pub tile_fill: String,
    pub light_fill: String,
    pub dark_fill: String,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            scale: 60.0,
            show_vertex_labels: true,
            coloring: None,
            tile_fill: "#f4f1e8".into(),
            light_fill: "#fdf6d8".into(),
            dark_fill: "#5b6d8c".into(),
        }
    }
}

const MARGIN: f64 = 0.8;

pub fn render_rhombic(t: &RhombicTiling, spec: &RenderSpec) -> Result<String> {
    render_svg(&ZonoTiling::from(t), spec)
}

pub fn render_svg(z: &ZonoTiling, spec: &RenderSpec) -> Result<String> {
    if !(spec.scale > 0.0 && spec.scale.is_finite()) {
        return Err(Error::Parse(format!("scale must be positive, got {}", spec.scale)));
    }
    if let Some(c) = &spec.coloring {
        let t = z
            .to_rhombic()
            .ok_or_else(|| Error::InvalidTiling("colorings need a rhombic tiling".into()))?;
        c.check_against(&t)?;
    }
    let g = PolygonGeometry::new(z.rank());
    let boundary = boundary_vertices(z.permutation());

    let points: Vec<Point> = boundary
        .iter()
        .map(|(_, s)| g.vertex_position(*s))
        .chain(z.tiles().iter().flat_map(|t| t.corners()).map(|s| g.vertex_position(s)))
        .collect();
    let min_x = points.iter().map(|p| p.x).fold(f64::INFINITY, f64::min) - MARGIN;
    let max_x = points.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max) + MARGIN;
    let min_y = points.iter().map(|p| p.y).fold(f64::INFINITY, f64::min) - MARGIN;
    let max_y = points.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max) + MARGIN;
    let s = spec.scale;
    let to_svg = |p: Point| ((p.x - min_x) * s, (max_y - p.y) * s);
    let width = (max_x - min_x) * s;
    let height = (max_y - min_y) * s;

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    writeln!(out, "  <title>tiling of E({})</title>", z.permutation()).unwrap();
    writeln!(
        out,
        r#"  <g stroke="black" stroke-width="{:.2}" stroke-linejoin="round">"#,
        (s / 40.0).max(0.5)
    )
    .unwrap();
    for (k, tile) in z.tiles().iter().enumerate() {
        let fill = match &spec.coloring {
            Some(c) if c.shade(k) == Shade::Dark => &spec.dark_fill,
            Some(_) => &spec.light_fill,
            None => &spec.tile_fill,
        };
        let corners: Vec<String> = tile
            .corners()
            .into_iter()
            .map(|v| {
                let (x, y) = to_svg(g.vertex_position(v));
                format!("{x:.3},{y:.3}")
            })
            .collect();
        writeln!(
            out,
            r#"    <polygon points="{}" fill="{}"/>"#,
            corners.join(" "),
            escape(fill)
        )
        .unwrap();
    }
    writeln!(out, "  </g>").unwrap();

    if spec.show_vertex_labels {
        let n = z.rank();
        let font = s * 0.28;
        writeln!(
            out,
            r#"  <g font-family="serif" font-size="{font:.2}" text-anchor="middle" dominant-baseline="middle">"#
        )
        .unwrap();
        for (v, set) in &boundary {
            let p = g.vertex_position(*set);
            let (dx, dy, text) = match *v {
                BoundaryVertex::Base(0) => (0.0, -0.4, label("C", "super", 0)),
                BoundaryVertex::Base(j) if j == n => (0.0, 0.4, label("C", "super", j)),
                BoundaryVertex::Base(j) => (-0.45, 0.0, label("C", "super", j)),
                BoundaryVertex::Right(j) => (0.45, 0.0, label("G", "sub", j)),
            };
            let (x, y) = to_svg(Point {
                x: p.x + dx,
                y: p.y + dy,
            });
            writeln!(out, r#"    <text x="{x:.3}" y="{y:.3}">{text}</text>"#).unwrap();
        }
        writeln!(out, "  </g>").unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

fn label(letter: &str, shift: &str, j: usize) -> String {
    format!(r#"{letter}<tspan baseline-shift="{shift}" font-size="70%">{j}</tspan>"#)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::Word;
    use crate::tilings::word_to_tiling;

    #[test]
    fn single_tile() {
        let t = word_to_tiling(&Word::parse("1", Some(2)).unwrap()).unwrap();
        let svg = render_rhombic(&t, &RenderSpec::default()).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert_eq!(svg.matches("<text").count(), 4);
    }

    #[test]
    fn coloring_checks() {
        let t = word_to_tiling(&Word::parse("1,2,1", Some(3)).unwrap()).unwrap();
        let spec = RenderSpec {
            coloring: Some(Coloring::from_bits("01").unwrap()),
            ..RenderSpec::default()
        };
        assert!(render_rhombic(&t, &spec).is_err());
        let spec = RenderSpec {
            coloring: Some(Coloring::from_bits("011").unwrap()),
            ..RenderSpec::default()
        };
        let svg = render_rhombic(&t, &spec).unwrap();
        assert_eq!(svg.matches(&spec.dark_fill).count(), 2);
        let bad_scale = RenderSpec {
            scale: 0.0,
            ..RenderSpec::default()
        };
        assert!(render_rhombic(&t, &bad_scale).is_err());
    }
}
