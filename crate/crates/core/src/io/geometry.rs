//! Planar coordinates for `E(w)`.
//!
//! Side `i` points at angle `π - (2i - 1)π / (2n)`, so sides `1..n` walk
//! from `C^0` up half of a regular `2n`-gon, bulging to the left, and a
//! vertex with label set `S` sits at the sum of its directions.

use std::f64::consts::PI;

use crate::labelset::LabelSet;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn distance(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn minus(self, other: Point) -> Point {
        Point {
            x: self.x - other.x,
            y: self.y - other.y,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonGeometry {
    n: usize,
}

impl PolygonGeometry {
    pub fn new(n: usize) -> Self {
        PolygonGeometry { n }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn angle(&self, label: usize) -> f64 {
        PI - (2 * label - 1) as f64 * PI / (2 * self.n) as f64
    }

    pub fn direction(&self, label: usize) -> Point {
        let theta = self.angle(label);
        Point {
            x: theta.cos(),
            y: theta.sin(),
        }
    }

    pub fn vertex_position(&self, s: LabelSet) -> Point {
        s.iter().fold(Point { x: 0.0, y: 0.0 }, |acc, i| {
            let d = self.direction(i);
            Point {
                x: acc.x + d.x,
                y: acc.y + d.y,
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-12;

    #[test]
    fn origin_and_apex() {
        for n in 1..=9 {
            let g = PolygonGeometry::new(n);
            let origin = g.vertex_position(LabelSet::EMPTY);
            assert_eq!(origin, Point { x: 0.0, y: 0.0 });
            let apex = g.vertex_position(LabelSet::prefix(n));
            assert!(apex.x.abs() < EPS, "n = {n}: apex x = {}", apex.x);
            assert!(apex.y > 0.0);
        }
    }

    #[test]
    fn rank_two_first_vertex() {
        let g = PolygonGeometry::new(2);
        let v = g.vertex_position(LabelSet::singleton(1));
        let angle = 135f64.to_radians();
        assert!((v.x - angle.cos()).abs() < EPS && (v.y - angle.sin()).abs() < EPS);
    }

    #[test]
    fn angles_strictly_decrease_in_open_half_plane() {
        for n in 1..=12 {
            let g = PolygonGeometry::new(n);
            for i in 1..=n {
                let t = g.angle(i);
                assert!(t > 0.0 && t < PI);
                if i > 1 {
                    assert!(t < g.angle(i - 1));
                }
            }
        }
    }
}
