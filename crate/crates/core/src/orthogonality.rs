//! Birkhoff, isosceles and Roberts orthogonality, conjugate directions, the
//! Benítez `α` function and orthogonal diagonals in Radon planes.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::norm::NormSpec;
use crate::optim::{bisect, golden_section_min};
use crate::polygon::Polygon;
use crate::vec2::{line_distance, Vec2};

/// Parallel threshold on `|[x̂, ŷ]|` for gauge-normalized inputs.
pub(crate) const PARALLEL_EPS: f64 = 1e-12;

/// Minimum of `t -> ‖x + t y‖`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BirkhoffDefect {
    pub t_star: f64,
    pub min_value: f64,
}

/// Minimizes the convex map `t -> ‖x + t y‖`.
///
/// Polygonal norms are minimized exactly over the kinks; other norms use
/// golden-section search on `[-2‖x‖/‖y‖, 2‖x‖/‖y‖]`, which always contains
/// the minimizer because `|t| ‖y‖ <= ‖x + t y‖ + ‖x‖ <= 2 ‖x‖` there. When
/// the minimum is attained on an interval, the point closest to `t = 0` is
/// reported.
pub fn birkhoff_defect(spec: &NormSpec, x: Vec2, y: Vec2) -> Result<BirkhoffDefect> {
    let xh = spec.normalize(x)?;
    let yh = spec.normalize(y)?;
    let (gx, gy) = (spec.gauge(x), spec.gauge(y));
    if xh.det(yh).abs() <= PARALLEL_EPS {
        return Ok(BirkhoffDefect {
            t_star: -x.dot(y) / y.dot(y),
            min_value: 0.0,
        });
    }
    let f = |t: f64| spec.gauge(x + y * t);
    if let Some(poly) = spec.polygon_ref() {
        return Ok(polygon_line_min(poly, x, y));
    }
    let r = 2.0 * gx / gy;
    let (t, v) = golden_section_min(f, -r, r, 1e-15 * r);
    let f0 = f(0.0);
    if f0 <= v {
        Ok(BirkhoffDefect {
            t_star: 0.0,
            min_value: f0,
        })
    } else {
        Ok(BirkhoffDefect {
            t_star: t,
            min_value: v,
        })
    }
}

fn polygon_line_min(poly: &Polygon, x: Vec2, y: Vec2) -> BirkhoffDefect {
    let f = |t: f64| poly.gauge(x + y * t);
    let mut evals: Vec<(f64, f64)> = poly
        .line_breakpoints(x, y)
        .into_iter()
        .map(|t| (t, f(t)))
        .collect();
    evals.push((0.0, f(0.0)));
    let min = evals.iter().map(|e| e.1).fold(f64::INFINITY, f64::min);
    let slack = min * 1e-14;
    let (lo, hi) = evals
        .iter()
        .filter(|e| e.1 <= min + slack)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), e| {
            (lo.min(e.0), hi.max(e.0))
        });
    let t_star = 0.0f64.clamp(lo, hi);
    BirkhoffDefect {
        t_star,
        min_value: f(t_star).min(min),
    }
}

/// `x ⊣_B y`: `‖x + t y‖ >= ‖x‖ - tol` for every `t`.
pub fn is_birkhoff(spec: &NormSpec, x: Vec2, y: Vec2, tol: f64) -> Result<bool> {
    let d = birkhoff_defect(spec, x, y)?;
    Ok(d.min_value >= spec.gauge(x) - tol)
}

/// `x ⊣_I y`: `|‖x + y‖ - ‖x - y‖| <= tol`.
pub fn is_isosceles(spec: &NormSpec, x: Vec2, y: Vec2, tol: f64) -> Result<bool> {
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok((spec.gauge(x + y) - spec.gauge(x - y)).abs() <= tol)
}

/// Result of the finite Roberts test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobertsReport {
    pub holds: bool,
    /// Largest `|‖x + t y‖ - ‖x - t y‖|` seen.
    pub max_gap: f64,
    /// Number of `t` values examined.
    pub checked: usize,
}

/// Number of log-spaced `t` values in `[1e-3, 1e3]` used by the Roberts test.
pub const ROBERTS_GRID: usize = 64;

/// Tests `‖x + t y‖ = ‖x - t y‖` on 64 log-spaced `t` in `[1e-3, 1e3]`, at
/// `t = 1`, and (for polygons) at every kink of either side. Gaps are
/// compared against `tol * max(1, ‖x ± t y‖)`.
pub fn roberts_report(spec: &NormSpec, x: Vec2, y: Vec2, tol: f64) -> Result<RobertsReport> {
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut ts: Vec<f64> = (0..ROBERTS_GRID)
        .map(|k| 10f64.powf(-3.0 + 6.0 * k as f64 / (ROBERTS_GRID - 1) as f64))
        .collect();
    ts.push(1.0);
    if let Some(poly) = spec.polygon_ref() {
        ts.extend(
            poly.line_breakpoints(x, y)
                .into_iter()
                .map(f64::abs)
                .filter(|t| *t > 0.0 && t.is_finite()),
        );
    }
    let mut max_gap: f64 = 0.0;
    let mut holds = true;
    for &t in &ts {
        let a = spec.gauge(x + y * t);
        let b = spec.gauge(x - y * t);
        let gap = (a - b).abs();
        max_gap = max_gap.max(gap);
        if gap > tol * a.max(b).max(1.0) {
            holds = false;
        }
    }
    Ok(RobertsReport {
        holds,
        max_gap,
        checked: ts.len(),
    })
}

/// `x ⊣_R y` on the finite grid of [`roberts_report`].
pub fn is_roberts(spec: &NormSpec, x: Vec2, y: Vec2, tol: f64) -> Result<bool> {
    Ok(roberts_report(spec, x, y, tol)?.holds)
}

/// Two unit vectors that are mutually Birkhoff orthogonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugatePair {
    pub x: Vec2,
    pub y: Vec2,
    /// Either direction has a whole cone of Birkhoff partners (a polygon
    /// vertex, or a direction parallel to an edge).
    pub degenerate: bool,
}

impl ConjugatePair {
    /// Normalizes `x`, `y` and checks both Birkhoff relations within `tol`.
    pub fn verified(spec: &NormSpec, x: Vec2, y: Vec2, tol: f64) -> Result<Self> {
        let x = spec.normalize(x)?;
        let y = spec.normalize(y)?;
        if x.det(y).abs() <= PARALLEL_EPS {
            return Err(Error::NotConjugate("directions are parallel".into()));
        }
        if !is_birkhoff(spec, x, y, tol)? {
            return Err(Error::NotConjugate("x is not Birkhoff orthogonal to y".into()));
        }
        if !is_birkhoff(spec, y, x, tol)? {
            return Err(Error::NotConjugate("y is not Birkhoff orthogonal to x".into()));
        }
        Ok(ConjugatePair::unchecked(spec, x, y))
    }

    fn unchecked(spec: &NormSpec, x: Vec2, y: Vec2) -> Self {
        let degenerate = spec.polygon_ref().is_some_and(|p| {
            [x, y]
                .iter()
                .any(|&d| p.is_vertex_direction(d, 1e-9) || p.is_edge_direction(d, 1e-9))
        });
        ConjugatePair { x, y, degenerate }
    }
}

/// A connected piece of the conjugacy relation.
#[derive(Debug, Clone, PartialEq)]
pub enum ConjugateFamily {
    Isolated(ConjugatePair),
    /// A polygon vertex `fixed` conjugate to every point of the boundary
    /// segment `[from, to]`.
    Segment { fixed: Vec2, from: Vec2, to: Vec2 },
}

impl ConjugateFamily {
    /// The family's pairs: the pair itself, or `rays` evenly spaced points of
    /// the segment including both ends.
    pub fn pairs(&self, spec: &NormSpec, rays: usize) -> Vec<ConjugatePair> {
        match *self {
            ConjugateFamily::Isolated(p) => vec![p],
            ConjugateFamily::Segment { fixed, from, to } => {
                let rays = rays.max(2);
                (0..rays)
                    .map(|k| {
                        let s = k as f64 / (rays - 1) as f64;
                        let y = from + (to - from) * s;
                        ConjugatePair::unchecked(spec, fixed, y / spec.gauge(y))
                    })
                    .collect()
            }
        }
    }
}

/// All conjugate directions, grouped into families.
///
/// Polygonal norms are enumerated exactly (vertex/vertex, vertex/edge and
/// edge/edge incidences). Other norms are scanned on `n_scan` directions of a
/// half-turn and sign changes of the reverse relation are refined by
/// bisection.
pub fn conjugate_families(spec: &NormSpec, n_scan: usize) -> Result<Vec<ConjugateFamily>> {
    if n_scan < 64 {
        return Err(Error::InvalidArgument(format!(
            "conjugate scan needs at least 64 directions, got {n_scan}"
        )));
    }
    let families = match spec.polygon_ref() {
        Some(poly) => polygon_families(spec, poly),
        None => scan_families(spec, n_scan),
    };
    if families.is_empty() {
        return Err(Error::Accuracy("no conjugate pair found".into()));
    }
    let (isolated, segments): (Vec<_>, Vec<_>) = families
        .into_iter()
        .partition(|f| matches!(f, ConjugateFamily::Isolated(_)));
    let pairs = isolated.iter().flat_map(|f| f.pairs(spec, 2)).collect();
    Ok(dedup_pairs(pairs)
        .into_iter()
        .map(ConjugateFamily::Isolated)
        .chain(segments)
        .collect())
}

/// Conjugate pairs with directions in the upper half-plane, deduplicated by
/// angular distance `1e-6`. Cones of conjugates contribute their two extreme
/// rays.
pub fn conjugate_pairs(spec: &NormSpec, n_scan: usize) -> Result<Vec<ConjugatePair>> {
    let pairs: Vec<ConjugatePair> = conjugate_families(spec, n_scan)?
        .iter()
        .flat_map(|f| f.pairs(spec, 2))
        .collect();
    Ok(dedup_pairs(pairs))
}

fn dedup_pairs(pairs: Vec<ConjugatePair>) -> Vec<ConjugatePair> {
    let mut out: Vec<ConjugatePair> = Vec::new();
    for p in pairs {
        let (mut a, mut b) = (p.x.upper(), p.y.upper());
        if b.line_angle() < a.line_angle() {
            std::mem::swap(&mut a, &mut b);
        }
        let seen = out.iter().any(|q| {
            line_distance(q.x, a) <= 1e-6 && line_distance(q.y, b) <= 1e-6
                || line_distance(q.x, b) <= 1e-6 && line_distance(q.y, a) <= 1e-6
        });
        if !seen {
            out.push(ConjugatePair {
                x: a,
                y: b,
                degenerate: p.degenerate,
            });
        }
    }
    out.sort_by(|p, q| {
        (p.x.line_angle(), p.y.line_angle())
            .partial_cmp(&(q.x.line_angle(), q.y.line_angle()))
            .unwrap()
    });
    out
}

fn polygon_families(spec: &NormSpec, poly: &Polygon) -> Vec<ConjugateFamily> {
    const TOL: f64 = 1e-12;
    let k = poly.half_len();
    let unit = |v: Vec2| v / v.euclid();
    let mut out = Vec::new();

    // vertex / vertex
    for i in 0..k {
        for j in i + 1..k {
            let (vi, vj) = (poly.vertex(i), poly.vertex(j));
            if poly.cone_contains(i, vj, TOL) && poly.cone_contains(j, vi, TOL) {
                out.push(ConjugateFamily::Isolated(ConjugatePair::unchecked(spec, vi, vj)));
            }
        }
    }

    // vertex / edge: edge j parallel to vertex i, partner ranges over the part
    // of the edge whose directions lie in the vertex's cone.
    for i in 0..k {
        let vi = poly.vertex(i);
        let n = poly.vertices().len();
        let a = unit(poly.edge((i + n - 1) % n));
        let b = unit(poly.edge(i));
        for j in 0..k {
            let e = poly.edge(j);
            if unit(e).det(unit(vi)).abs() > TOL {
                continue;
            }
            let start = poly.vertex(j);
            let point = |s: f64| start + e * s;
            // Both cone determinants are affine in s.
            let c1 = |s: f64| a.det(unit(point(s)));
            let c2 = |s: f64| unit(point(s)).det(b);
            let mut cuts = vec![0.0, 1.0];
            for c in [&c1 as &dyn Fn(f64) -> f64, &c2] {
                let (f0, f1) = (c(0.0), c(1.0));
                if f0 * f1 < 0.0 {
                    cuts.push(bisect(c, 0.0, 1.0, 1e-15));
                }
            }
            cuts.sort_by(|p, q| p.partial_cmp(q).unwrap());
            let mut intervals: Vec<(f64, f64)> = Vec::new();
            for w in cuts.windows(2) {
                let mid = 0.5 * (w[0] + w[1]);
                if c1(mid) * c2(mid) >= -TOL {
                    match intervals.last_mut() {
                        Some(last) if (last.1 - w[0]).abs() <= 1e-15 => last.1 = w[1],
                        _ => intervals.push((w[0], w[1])),
                    }
                }
            }
            for (s0, s1) in intervals {
                let (p0, p1) = (point(s0), point(s1));
                if s1 - s0 > 1e-12 {
                    out.push(ConjugateFamily::Segment {
                        fixed: vi,
                        from: p0,
                        to: p1,
                    });
                } else {
                    out.push(ConjugateFamily::Isolated(ConjugatePair::unchecked(spec, vi, p0)));
                }
            }
        }
    }

    // edge / edge: x on edge i parallel to edge j and y on edge j parallel
    // to edge i.
    for i in 0..k {
        for j in i + 1..k {
            let (ei, ej) = (poly.edge(i), poly.edge(j));
            let den = ei.det(ej);
            if den.abs() <= TOL * ei.euclid() * ej.euclid() {
                continue;
            }
            let (vi, vj) = (poly.vertex(i), poly.vertex(j));
            let s = -vi.det(ej) / den;
            let t = -vj.det(ei) / -den;
            let inside = |s: f64| (-1e-12..=1.0 + 1e-12).contains(&s);
            if inside(s) && inside(t) {
                let x = vi + ei * s;
                let y = vj + ej * t;
                out.push(ConjugateFamily::Isolated(ConjugatePair::unchecked(spec, x, y)));
            }
        }
    }
    out
}

/// Signed reverse-relation residual at direction `theta`: for `x` on the
/// unit circle and its Birkhoff partner `y` (`y ⊣_B x`), the sine of the
/// Euclidean angle between `x` and the direction Birkhoff orthogonal from
/// `y`. Zero exactly at conjugate pairs of a smooth strictly convex norm.
fn reverse_residual(spec: &NormSpec, theta: f64) -> (f64, Vec2, Vec2) {
    let x = spec.unit_point(theta);
    let y = spec.antinorm_raw(x).1;
    let back = spec.antinorm_raw(y).1;
    (back.euclid_sin(x), x, y)
}

fn scan_families(spec: &NormSpec, n_scan: usize) -> Vec<ConjugateFamily> {
    const ZERO: f64 = 1e-12;
    let step = PI / n_scan as f64;
    let samples: Vec<f64> = (0..=n_scan)
        .map(|k| reverse_residual(spec, k as f64 * step).0)
        .collect();
    let mut out = Vec::new();
    let mut push = |theta: f64| {
        let (_, x, y) = reverse_residual(spec, theta);
        out.push(ConjugateFamily::Isolated(ConjugatePair::unchecked(
            spec,
            x.upper(),
            y.upper(),
        )));
    };
    for k in 0..n_scan {
        let (h0, h1) = (samples[k], samples[k + 1]);
        if h0.abs() <= ZERO {
            push(k as f64 * step);
        } else if h1.abs() > ZERO && (h0 > 0.0) != (h1 > 0.0) {
            let a = k as f64 * step;
            let root = bisect(|t| reverse_residual(spec, t).0, a, a + step, 1e-15);
            push(root);
        }
    }
    out
}

/// Birkhoff partners `y` of unit `x` satisfying `x ⊣_I y`, one per root of
/// `φ -> ‖x + u(φ)‖ - ‖x - u(φ)‖` on the half-turn after `x`.
///
/// The half-turn is cut at `n_sub` evenly spaced angles (plus polygon vertex
/// angles); every sign change is bisected and every sample that is already a
/// root is kept, so flat stretches of roots on polygons are represented by
/// their samples.
pub fn isosceles_partners(spec: &NormSpec, x: Vec2, n_sub: usize) -> Vec<Vec2> {
    let theta = x.angle();
    let h = |phi: f64| {
        let y = spec.unit_point(phi);
        spec.gauge(x + y) - spec.gauge(x - y)
    };
    let mut phis: Vec<f64> = (0..=n_sub)
        .map(|j| theta + PI * j as f64 / n_sub as f64)
        .collect();
    if let Some(poly) = spec.polygon_ref() {
        for &v in poly.vertices() {
            let mut a = v.angle();
            while a <= theta {
                a += 2.0 * PI;
            }
            while a > theta + PI {
                a -= 2.0 * PI;
            }
            if a > theta && a < theta + PI {
                phis.push(a);
            }
        }
        phis.sort_by(|a, b| a.partial_cmp(b).unwrap());
    }
    let vals: Vec<f64> = phis.iter().map(|&p| h(p)).collect();
    let zero = 1e-14 * spec.gauge(x).max(1.0);
    let mut out = Vec::new();
    for j in 0..phis.len() {
        if vals[j].abs() <= zero {
            out.push(spec.unit_point(phis[j]));
        } else if j + 1 < phis.len()
            && vals[j + 1].abs() > zero
            && (vals[j] > 0.0) != (vals[j + 1] > 0.0)
        {
            let root = bisect(h, phis[j], phis[j + 1], 1e-15);
            out.push(spec.unit_point(root));
        }
    }
    out
}

/// Signed slope of `t -> ‖u + t v‖` at 0: positive when the minimizer lies
/// at `t < 0`, negative when it lies at `t > 0`, zero when `u ⊣_B v`.
fn birkhoff_slope(spec: &NormSpec, u: Vec2, v: Vec2) -> f64 {
    let left = -spec.gauge_derivative(u, -v);
    let right = spec.gauge_derivative(u, v);
    if left > 0.0 {
        left
    } else if right < 0.0 {
        right
    } else {
        0.0
    }
}

/// The unique `α > 0` with `(x + α y) ⊣_B (x - α y)`.
///
/// Bisection on `ln α`, starting from `[1e-9, 1e9]` and widening on a
/// missing sign change, to relative accuracy `1e-12`.
pub fn benitez_alpha(spec: &NormSpec, x: Vec2, y: Vec2) -> Result<f64> {
    let xh = spec.normalize(x)?;
    let yh = spec.normalize(y)?;
    if xh.det(yh).abs() <= PARALLEL_EPS {
        return Err(Error::Parallel);
    }
    let sigma = |ln_a: f64| {
        let a = ln_a.exp();
        birkhoff_slope(spec, x + y * a, x - y * a)
    };
    let (mut lo, mut hi) = (1e-9f64.ln(), 1e9f64.ln());
    let mut widenings = 0;
    while !(sigma(lo) >= 0.0 && sigma(hi) <= 0.0) {
        widenings += 1;
        if widenings > 20 {
            return Err(Error::Accuracy("no sign change bracketing α".into()));
        }
        lo -= 3.0 * std::f64::consts::LN_10;
        hi += 3.0 * std::f64::consts::LN_10;
    }
    let root = bisect(sigma, lo, hi, 1e-13);
    Ok(root.exp())
}

/// Unit `x`, `y` with different directions and `(x + y) ⊣_B (x - y)`, from
/// the default seeds `v = u(0)`, `w = u(π/2)`.
pub fn find_orthogonal_diagonals(spec: &NormSpec) -> Result<(Vec2, Vec2)> {
    let v = spec.unit_point(0.0);
    let w = spec.unit_point(PI / 2.0);
    find_orthogonal_diagonals_from(spec, v, w, crate::norm::DEFAULT_TOL)
}

/// Follows `λ -> α(x(λ), y(λ))` with `x(λ) ∝ (1-λ) v + λ w` and
/// `y(λ) ∝ (1-λ) w - λ v` and bisects `ln α = 0` on `[0, 1]`. In a Radon
/// plane `α` at the two ends are reciprocal, so a root exists.
pub fn find_orthogonal_diagonals_from(
    spec: &NormSpec,
    v: Vec2,
    w: Vec2,
    radon_tol: f64,
) -> Result<(Vec2, Vec2)> {
    let radon = spec.is_radon(1024, radon_tol)?;
    if !radon.is_radon {
        return Err(Error::NotRadon {
            spread: radon.spread,
            tol: radon_tol,
        });
    }
    let v = spec.normalize(v)?;
    let w = spec.normalize(w)?;
    if v.det(w).abs() <= PARALLEL_EPS {
        return Err(Error::Parallel);
    }
    let blend = |lambda: f64| {
        let x = v * (1.0 - lambda) + w * lambda;
        let y = w * (1.0 - lambda) - v * lambda;
        (x / spec.gauge(x), y / spec.gauge(y))
    };
    let log_alpha = |lambda: f64| {
        let (x, y) = blend(lambda);
        benitez_alpha(spec, x, y).map(f64::ln).unwrap_or(f64::NAN)
    };
    let (f0, f1) = (log_alpha(0.0), log_alpha(1.0));
    if !f0.is_finite() || !f1.is_finite() {
        return Err(Error::Accuracy("α undefined along the homotopy".into()));
    }
    let lambda = if f0.abs() <= 1e-13 {
        0.0
    } else if f0 * f1 > 0.0 {
        return Err(Error::Accuracy(format!(
            "α(v,w) = {:.6e} and α(w,-v) = {:.6e} are not reciprocal",
            f0.exp(),
            (-f1).exp()
        )));
    } else {
        bisect(log_alpha, 0.0, 1.0, 1e-15)
    };
    let (x, y) = blend(lambda);
    let d = birkhoff_defect(spec, x + y, x - y)?;
    let g = spec.gauge(x + y);
    if d.min_value < g - 1e-8 * g.max(1.0) {
        return Err(Error::Accuracy(format!(
            "diagonal defect {:.3e} after root finding",
            g - d.min_value
        )));
    }
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::grid_min;
    use crate::DEFAULT_TOL;
    use proptest::prelude::*;

    const S3: f64 = 0.866_025_403_784_438_6;
    const R2: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn hexagon() -> NormSpec {
        NormSpec::regular_polygon(6).unwrap()
    }

    fn v(x: f64, y: f64) -> Vec2 {
        Vec2::new(x, y)
    }

    #[test]
    fn defect_examples() {
        let e = NormSpec::euclidean();
        let d = birkhoff_defect(&e, v(1.0, 0.0), v(0.0, 1.0)).unwrap();
        assert_eq!(d.t_star, 0.0);
        assert!((d.min_value - 1.0).abs() < 1e-15);

        let y = v(R2, R2);
        let d = birkhoff_defect(&e, v(1.0, 0.0), y).unwrap();
        let (t_oracle, m_oracle) = grid_min(|t| e.gauge(v(1.0, 0.0) + y * t), -3.0, 3.0);
        assert!((t_oracle + R2).abs() < 1e-9 && (m_oracle - R2).abs() < 1e-12);
        assert!((d.t_star - t_oracle).abs() < 1e-7);
        assert!((d.min_value - m_oracle).abs() < 1e-12);

        let m = NormSpec::max_norm();
        let d = birkhoff_defect(&m, v(1.0, 0.0), v(1.0, 1.0)).unwrap();
        let (t_oracle, m_oracle) = grid_min(|t: f64| (1.0 + t).abs().max(t.abs()), -3.0, 3.0);
        assert!((t_oracle + 0.5).abs() < 1e-9 && (m_oracle - 0.5).abs() < 1e-9);
        assert!((d.t_star + 0.5).abs() < 1e-15 && (d.min_value - 0.5).abs() < 1e-15);
        assert!(!is_birkhoff(&m, v(1.0, 0.0), v(1.0, 1.0), DEFAULT_TOL).unwrap());
        // the max-norm minimum is flat on [-1, 1]; t = 0 is reported
        let d = birkhoff_defect(&m, v(1.0, 0.0), v(0.0, 1.0)).unwrap();
        assert_eq!(d.t_star, 0.0);
    }

    #[test]
    fn defect_parallel_and_zero() {
        let e = NormSpec::euclidean();
        let d = birkhoff_defect(&e, v(2.0, 0.0), v(-1.0, 0.0)).unwrap();
        assert_eq!(d.min_value, 0.0);
        assert_eq!(d.t_star, 2.0);
        assert_eq!(birkhoff_defect(&e, Vec2::ZERO, v(1.0, 0.0)).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn isosceles_examples() {
        let e = NormSpec::euclidean();
        let m = NormSpec::max_norm();
        assert!(is_isosceles(&e, v(1.0, 0.0), v(0.0, 1.0), DEFAULT_TOL).unwrap());
        assert!(is_isosceles(&m, v(1.0, 0.0), v(0.0, 1.0), DEFAULT_TOL).unwrap());
        assert!(!is_isosceles(&e, v(1.0, 0.0), v(1.0, 1.0), DEFAULT_TOL).unwrap());
        assert!(is_isosceles(&e, Vec2::ZERO, v(1.0, 1.0), DEFAULT_TOL).is_err());
    }

    #[test]
    fn roberts_examples() {
        let e = NormSpec::euclidean();
        let m = NormSpec::max_norm();
        assert!(is_roberts(&m, v(1.0, 0.0), v(0.0, 1.0), DEFAULT_TOL).unwrap());
        assert!(!is_roberts(&e, v(1.0, 0.0), v(1.0, 1.0), DEFAULT_TOL).unwrap());
        for spec in [e, m, hexagon()] {
            let x = v(0.3, 0.8);
            assert!(!is_roberts(&spec, x, x, DEFAULT_TOL).unwrap());
        }
        let r = roberts_report(&hexagon(), v(1.0, 0.0), v(0.0, 1.0), DEFAULT_TOL).unwrap();
        assert!(r.holds && r.checked > ROBERTS_GRID);
    }

    #[test]
    fn conjugates_euclidean() {
        let pairs = conjugate_pairs(&NormSpec::euclidean(), 64).unwrap();
        assert!(pairs
            .iter()
            .any(|p| (p.x - v(1.0, 0.0)).euclid() < 1e-12 && (p.y - v(0.0, 1.0)).euclid() < 1e-12));
        assert!(pairs.iter().all(|p| p.x.dot(p.y).abs() < 1e-12 && !p.degenerate));
    }

    #[test]
    fn conjugates_max_norm_exact() {
        // Exhaustive oracle: every pair of sampled boundary directions checked
        // for mutual Birkhoff orthogonality.
        let m = NormSpec::max_norm();
        let n = 72;
        let dirs: Vec<Vec2> = (0..n).map(|k| m.unit_point(PI * k as f64 / n as f64)).collect();
        let mut oracle = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if is_birkhoff(&m, dirs[i], dirs[j], 1e-12).unwrap()
                    && is_birkhoff(&m, dirs[j], dirs[i], 1e-12).unwrap()
                {
                    oracle.push((dirs[i], dirs[j]));
                }
            }
        }
        assert_eq!(oracle.len(), 2);
        let pairs = conjugate_pairs(&m, 64).unwrap();
        assert_eq!(pairs.len(), 2);
        assert_eq!((pairs[0].x, pairs[0].y), (v(1.0, 0.0), v(0.0, 1.0)));
        assert_eq!((pairs[1].x, pairs[1].y), (v(1.0, 1.0), v(-1.0, 1.0)));
        assert!(pairs.iter().all(|p| p.degenerate));
        for (p, o) in pairs.iter().zip(&oracle) {
            assert!((p.x - o.0).euclid() < 1e-12 && (p.y - o.1).euclid() < 1e-12);
        }
    }

    #[test]
    fn conjugates_hexagon() {
        let h = hexagon();
        let pairs = conjugate_pairs(&h, 64).unwrap();
        let hit = pairs.iter().find(|p| {
            (p.x - v(1.0, 0.0)).euclid() < 1e-12 && (p.y - v(-0.5, S3)).euclid() < 1e-12
        });
        let p = hit.expect("((1,0),(-1/2,√3/2)) is conjugate");
        assert!(p.degenerate);
        assert!((h.gauge(p.x + p.y) - 1.0).abs() < 1e-12);
        for p in &pairs {
            assert!(is_birkhoff(&h, p.x, p.y, 1e-12).unwrap());
            assert!(is_birkhoff(&h, p.y, p.x, 1e-12).unwrap());
        }
        let fams = conjugate_families(&h, 64).unwrap();
        let segs = fams
            .iter()
            .filter(|f| matches!(f, ConjugateFamily::Segment { .. }))
            .count();
        assert_eq!(segs, 3);
    }

    #[test]
    fn conjugates_lp_are_verified() {
        for p in [1.5, 3.0] {
            let spec = NormSpec::lp(p).unwrap();
            let pairs = conjugate_pairs(&spec, 256).unwrap();
            assert!(!pairs.is_empty());
            for c in &pairs {
                ConjugatePair::verified(&spec, c.x, c.y, 1e-9).unwrap();
                assert!(!c.degenerate);
            }
            // axes and diagonals are conjugate by symmetry
            assert!(pairs.iter().any(|c| line_distance(c.x, v(1.0, 0.0)) < 1e-9));
            assert!(pairs.iter().any(|c| line_distance(c.x, v(1.0, 1.0)) < 1e-9));
        }
        assert!(conjugate_pairs(&NormSpec::euclidean(), 10).is_err());
    }

    #[test]
    fn verified_rejects_non_conjugate() {
        let m = NormSpec::max_norm();
        assert!(matches!(
            ConjugatePair::verified(&m, v(1.0, 0.0), v(1.0, 1.0), DEFAULT_TOL),
            Err(Error::NotConjugate(_))
        ));
    }

    #[test]
    fn alpha_examples() {
        let e = NormSpec::euclidean();
        let a = benitez_alpha(&e, v(2.0, 0.0), v(0.0, 1.0)).unwrap();
        // bisection oracle on the inner-product residual <x+αy, x-αy>
        let oracle = bisect(|a| 4.0 - a * a, 1e-3, 1e3, 1e-15);
        assert!((a - oracle).abs() < 1e-10 * oracle);
        assert!((a - 2.0).abs() < 2e-12);
        let a = benitez_alpha(&e, v(R2, R2), v(-R2, R2)).unwrap();
        assert!((a - 1.0).abs() < 1e-12);
        let m = NormSpec::max_norm();
        let a = benitez_alpha(&m, v(1.0, 0.0), v(0.0, 1.0)).unwrap();
        assert!((a - 1.0).abs() < 1e-12);
        assert!(is_birkhoff(&m, v(1.0, 1.0), v(1.0, -1.0), 1e-12).unwrap());
        assert_eq!(benitez_alpha(&m, v(1.0, 0.0), v(-2.0, 0.0)).unwrap_err(), Error::Parallel);
    }

    #[test]
    fn orthogonal_diagonals() {
        let e = NormSpec::euclidean();
        let (x, y) = find_orthogonal_diagonals(&e).unwrap();
        assert!((x + y).dot(x - y).abs() < 1e-9);
        let h = hexagon();
        let (x, y) = find_orthogonal_diagonals_from(&h, v(1.0, 0.0), v(0.0, S3), DEFAULT_TOL).unwrap();
        let d = birkhoff_defect(&h, x + y, x - y).unwrap();
        assert!((d.min_value - h.gauge(x + y)).abs() < 1e-8);
        assert!(line_distance(x, y) > 1e-6);
        assert!(matches!(
            find_orthogonal_diagonals(&NormSpec::max_norm()),
            Err(Error::NotRadon { .. })
        ));
    }

    #[test]
    fn homotopy_identity_on_radon() {
        for spec in [NormSpec::euclidean(), hexagon(), NormSpec::regular_polygon(10).unwrap()] {
            for k in 0..20 {
                let a = 0.3 * k as f64;
                let (x, y) = (spec.unit_point(a), spec.unit_point(a + 0.4 + 0.1 * k as f64));
                let p = benitez_alpha(&spec, x, y).unwrap() * benitez_alpha(&spec, y, -x).unwrap();
                assert!((p - 1.0).abs() < 1e-7, "{} {p}", spec.label());
            }
        }
    }

    #[test]
    fn witness_is_birkhoff_orthogonal() {
        for spec in [NormSpec::euclidean(), NormSpec::lp(3.0).unwrap(), hexagon(), NormSpec::max_norm()] {
            for k in 0..40 {
                let x = Vec2::from_angle(0.157 * k as f64);
                let w = spec.antinorm(x).unwrap().witness;
                assert!((spec.gauge(w) - 1.0).abs() < 1e-12);
                assert!(is_birkhoff(&spec, w, x, 1e-8).unwrap(), "{}", spec.label());
            }
        }
    }

    #[test]
    fn isosceles_partner_roots() {
        let e = NormSpec::euclidean();
        let ys = isosceles_partners(&e, v(1.0, 0.0), 64);
        assert_eq!(ys.len(), 1);
        assert!((ys[0] - v(0.0, 1.0)).euclid() < 1e-12);
        let h = hexagon();
        for k in 0..10 {
            let x = h.unit_point(0.29 * k as f64);
            for y in isosceles_partners(&h, x, 128) {
                assert!(is_isosceles(&h, x, y, 1e-12).unwrap());
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn radon_symmetry_on_hexagon(a in 0.0..6.3f64, b in 0.0..6.3f64) {
            let h = hexagon();
            let (x, y) = (h.unit_point(a), h.unit_point(b));
            prop_assume!(x.det(y).abs() > 1e-9);
            prop_assert_eq!(is_birkhoff(&h, x, y, 1e-9).unwrap(), is_birkhoff(&h, y, x, 1e-9).unwrap());
        }

        #[test]
        fn roberts_implies_birkhoff_and_isosceles(a in 0.0..6.3f64) {
            for spec in [NormSpec::euclidean(), NormSpec::max_norm(), hexagon()] {
                let x = spec.unit_point(a);
                for k in 0..16 {
                    let y = spec.unit_point(a + PI * (k as f64 + 0.5) / 16.0);
                    if is_roberts(&spec, x, y, 1e-9).unwrap() {
                        prop_assert!(is_birkhoff(&spec, x, y, 1e-9).unwrap());
                        prop_assert!(is_birkhoff(&spec, y, x, 1e-9).unwrap());
                        prop_assert!(is_isosceles(&spec, x, y, 1e-9).unwrap());
                    }
                }
            }
        }

        #[test]
        fn defect_never_exceeds_gauge(ax in -3.0..3.0f64, ay in -3.0..3.0f64, bx in -3.0..3.0f64, by in -3.0..3.0f64) {
            let (x, y) = (v(ax, ay), v(bx, by));
            prop_assume!(!x.is_zero() && !y.is_zero());
            for spec in [NormSpec::lp(1.5).unwrap(), hexagon()] {
                let d = birkhoff_defect(&spec, x, y).unwrap();
                prop_assert!(d.min_value <= spec.gauge(x) + 1e-15);
                prop_assert!((spec.gauge(x + y * d.t_star) - d.min_value).abs() <= 1e-12);
            }
        }
    }
}
