//! Centrally symmetric convex polygons used as unit balls.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::vec2::{line_distance, Vec2};

/// A centrally symmetric convex polygon, stored as its full counterclockwise
/// vertex cycle. Vertex `i + half` is always `-vertex(i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Vec2>,
    half: usize,
    /// Edge functionals for the first `half` edges: `normals[i] . p == 1` on
    /// edge `i`.
    normals: Vec<Vec2>,
}

impl Polygon {
    /// Builds the polygon spanned by `half_vertices` and their reflections
    /// through the origin. Consecutive duplicates and collinear vertices are
    /// merged; clockwise input is reversed.
    pub fn new(half_vertices: &[Vec2]) -> Result<Self> {
        if half_vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidNorm("polygon vertices must be finite".into()));
        }
        let scale = half_vertices
            .iter()
            .map(|v| v.euclid())
            .fold(0.0_f64, f64::max);
        if scale == 0.0 {
            return Err(Error::InvalidNorm(
                "polygon needs at least 2 distinct half-vertices".into(),
            ));
        }
        let mut full: Vec<Vec2> = half_vertices.to_vec();
        full.extend(half_vertices.iter().map(|&v| -v));
        dedup_cyclic(&mut full, 1e-12 * scale);
        if full.len() < 4 {
            return Err(Error::InvalidNorm(
                "polygon needs at least 2 distinct half-vertices".into(),
            ));
        }

        let area = shoelace(&full);
        if area.abs() <= 1e-12 * scale * scale {
            return Err(Error::InvalidNorm("polygon has zero area".into()));
        }
        if area < 0.0 {
            full.reverse();
        }
        merge_collinear(&mut full)?;

        let n = full.len();
        if n < 4 || n % 2 != 0 {
            return Err(Error::InvalidNorm(
                "vertices do not form a centrally symmetric convex polygon".into(),
            ));
        }
        let mut winding = 0.0;
        for i in 0..n {
            let a = full[i];
            let b = full[(i + 1) % n];
            let c = full[(i + 2) % n];
            let turn = (b - a).det(c - b);
            if turn <= 0.0 {
                return Err(Error::InvalidNorm(format!(
                    "polygon is not convex at vertex ({}, {})",
                    b.x, b.y
                )));
            }
            let wedge = a.det(b);
            if wedge <= 0.0 {
                return Err(Error::InvalidNorm(
                    "polygon does not strictly contain the origin".into(),
                ));
            }
            winding += wedge.atan2(a.dot(b));
        }
        if (winding - TAU).abs() > 1e-9 {
            return Err(Error::InvalidNorm(
                "polygon vertices wind around the origin more than once".into(),
            ));
        }
        let half = n / 2;
        for i in 0..half {
            if (full[i] + full[i + half]).euclid() > 1e-9 * scale {
                return Err(Error::InvalidNorm(
                    "polygon is not centrally symmetric".into(),
                ));
            }
        }
        let normals = (0..half)
            .map(|i| {
                let a = full[i];
                let e = full[i + 1] - a;
                let outward = Vec2::new(e.y, -e.x);
                outward / outward.dot(a)
            })
            .collect();
        Ok(Polygon {
            vertices: full,
            half,
            normals,
        })
    }

    /// Regular polygon with `n` vertices (even, at least 4) on the Euclidean
    /// unit circle, the first at angle `phase`.
    pub fn regular(n: usize, phase: f64) -> Result<Self> {
        if n < 4 || n % 2 != 0 {
            return Err(Error::InvalidNorm(format!(
                "regular polygon needs an even vertex count >= 4, got {n}"
            )));
        }
        let half: Vec<Vec2> = (0..n / 2)
            .map(|k| Vec2::from_angle(phase + TAU * k as f64 / n as f64))
            .collect();
        Polygon::new(&half)
    }

    /// Full counterclockwise vertex cycle.
    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    /// The first half of the vertex cycle; the rest are their negatives.
    pub fn half_vertices(&self) -> &[Vec2] {
        &self.vertices[..self.half]
    }

    pub fn vertex(&self, i: usize) -> Vec2 {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge vector from vertex `i` to vertex `i + 1` (indices taken cyclically).
    pub fn edge(&self, i: usize) -> Vec2 {
        let n = self.vertices.len();
        let i = i % n;
        self.vertices[(i + 1) % n] - self.vertices[i]
    }

    pub fn half_len(&self) -> usize {
        self.half
    }

    /// Exact gauge: the largest edge functional.
    pub fn gauge(&self, x: Vec2) -> f64 {
        self.normals
            .iter()
            .map(|n| n.dot(x).abs())
            .fold(0.0, f64::max)
    }

    /// Exact antinorm `max |[x, v]|` over the vertices, with a maximizing
    /// vertex `w` oriented so that `[x, w] >= 0`.
    pub fn antinorm(&self, x: Vec2) -> (f64, Vec2) {
        let mut best = (-1.0, Vec2::ZERO);
        for &v in self.half_vertices() {
            let d = x.det(v);
            if d.abs() > best.0 {
                best = (d.abs(), if d >= 0.0 { v } else { -v });
            }
        }
        best
    }

    /// Parameters `t` at which `x + t y` crosses a vertex ray; the kinks of
    /// `t -> gauge(x + t y)`.
    pub fn line_breakpoints(&self, x: Vec2, y: Vec2) -> Vec<f64> {
        self.half_vertices()
            .iter()
            .filter_map(|&v| {
                let dy = y.det(v);
                if dy.abs() <= 1e-300 {
                    None
                } else {
                    Some(-x.det(v) / dy)
                }
            })
            .collect()
    }

    /// One-sided directional derivative of the gauge at `x` in direction `d`.
    pub fn gauge_derivative(&self, x: Vec2, d: Vec2) -> f64 {
        let g = self.gauge(x);
        if g == 0.0 {
            return self.gauge(d);
        }
        let mut best = f64::NEG_INFINITY;
        for n in &self.normals {
            let v = n.dot(x);
            if v.abs() >= g * (1.0 - 1e-12) {
                let slope = v.signum() * n.dot(d);
                best = best.max(slope);
            }
        }
        best
    }

    /// Whether the undirected line through `d` lies in the cone of supporting
    /// directions at vertex `i`.
    pub fn cone_contains(&self, i: usize, d: Vec2, tol: f64) -> bool {
        let n = self.vertices.len();
        let a = self.edge((i + n - 1) % n);
        let b = self.edge(i);
        let a = a / a.euclid();
        let b = b / b.euclid();
        let d = d / d.euclid();
        a.det(d) * d.det(b) >= -tol
    }

    /// Whether `d` points (up to sign) at a vertex.
    pub fn is_vertex_direction(&self, d: Vec2, tol: f64) -> bool {
        self.half_vertices()
            .iter()
            .any(|&v| line_distance(v, d) <= tol)
    }

    /// Whether `d` is (up to sign) parallel to an edge.
    pub fn is_edge_direction(&self, d: Vec2, tol: f64) -> bool {
        (0..self.half).any(|i| line_distance(self.edge(i), d) <= tol)
    }

    /// Unit ball of the antinorm `x -> max_v |[x, v]|`: its vertices are the
    /// edge vectors scaled by `1 / [v_i, v_{i+1}]`.
    pub fn anti_polygon(&self) -> Result<Polygon> {
        let half: Vec<Vec2> = (0..self.half)
            .map(|i| {
                let a = self.vertices[i];
                let b = self.vertex(i + 1);
                (a - b) / a.det(b)
            })
            .collect();
        Polygon::new(&half)
    }

    /// Directions worth sampling explicitly: vertices, edge midpoints and
    /// edge directions (the kinks of the antinorm).
    pub fn feature_directions(&self) -> Vec<Vec2> {
        let mut out = Vec::with_capacity(3 * self.half);
        for i in 0..self.half {
            out.push(self.vertices[i]);
            out.push((self.vertices[i] + self.vertex(i + 1)) * 0.5);
            out.push(self.edge(i));
        }
        out
    }
}

fn dedup_cyclic(pts: &mut Vec<Vec2>, tol: f64) {
    let mut out: Vec<Vec2> = Vec::with_capacity(pts.len());
    for &p in pts.iter() {
        if out.last().map_or(true, |&q| (p - q).euclid() > tol) {
            out.push(p);
        }
    }
    while out.len() > 1 && (out[0] - out[out.len() - 1]).euclid() <= tol {
        out.pop();
    }
    *pts = out;
}

fn shoelace(pts: &[Vec2]) -> f64 {
    let n = pts.len();
    0.5 * (0..n).map(|i| pts[i].det(pts[(i + 1) % n])).sum::<f64>()
}

fn merge_collinear(pts: &mut Vec<Vec2>) -> Result<()> {
    loop {
        let n = pts.len();
        if n < 3 {
            return Ok(());
        }
        let mut removed = false;
        for i in 0..n {
            let prev = pts[(i + n - 1) % n];
            let cur = pts[i];
            let next = pts[(i + 1) % n];
            let e1 = cur - prev;
            let e2 = next - cur;
            let cross = e1.det(e2);
            if cross.abs() <= 1e-12 * e1.euclid() * e2.euclid() {
                if e1.dot(e2) < 0.0 {
                    return Err(Error::InvalidNorm(
                        "polygon folds back on itself".into(),
                    ));
                }
                pts.remove(i);
                removed = true;
                break;
            }
        }
        if !removed {
            return Ok(());
        }
    }
}
