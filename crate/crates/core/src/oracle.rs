//! Brute-force reference computations used only by unit tests.

use crate::vec2::Vec2;

/// Gauge of `x` found by intersecting the ray through `x` with every edge of
/// the closed polygon `vertices`.
pub fn ray_cast_gauge(vertices: &[Vec2], x: Vec2) -> f64 {
    let n = vertices.len();
    let mut best_t = f64::INFINITY;
    for i in 0..n {
        let a = vertices[i];
        let e = vertices[(i + 1) % n] - a;
        // t x = a + s e
        let den = x.det(e);
        if den.abs() < 1e-300 {
            continue;
        }
        let t = a.det(e) / den;
        let s = a.det(x) / den;
        if t > 0.0 && (-1e-12..=1.0 + 1e-12).contains(&s) {
            best_t = best_t.min(t);
        }
    }
    1.0 / best_t
}

/// Minimum of `f` on `[a, b]` by repeated grid zooming (no unimodality
/// assumption inside the first grid).
pub fn grid_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> (f64, f64) {
    let n = 2000;
    let mut best = (a, f(a));
    for _ in 0..12 {
        let h = (b - a) / n as f64;
        for i in 0..=n {
            let t = a + h * i as f64;
            let v = f(t);
            if v < best.1 {
                best = (t, v);
            }
        }
        a = best.0 - 2.0 * h;
        b = best.0 + 2.0 * h;
    }
    best
}

/// Maximum of `|[x, v]|` over `m` sampled directions of a unit circle given
/// by a gauge.
pub fn sampled_antinorm<G: Fn(Vec2) -> f64>(gauge: G, x: Vec2, m: usize) -> f64 {
    (0..m)
        .map(|k| {
            let d = Vec2::from_angle(std::f64::consts::PI * k as f64 / m as f64);
            (x.det(d) / gauge(d)).abs()
        })
        .fold(0.0, f64::max)
}
