//! Norm definitions: gauge, antinorm, boundary sampling, Radon detection.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::polygon::Polygon;
use crate::vec2::Vec2;

/// Default absolute tolerance of the boolean geometric predicates.
pub const DEFAULT_TOL: f64 = 1e-9;

/// The kind of unit ball a [`NormSpec`] was built from.
#[derive(Debug, Clone, PartialEq)]
pub enum NormKind {
    Euclidean,
    /// `p` in `[1, inf]`; `f64::INFINITY` is the max norm.
    Lp { p: f64 },
    Polygon(Polygon),
}

/// A validated planar norm. Immutable once constructed.
///
/// The `p = 1` and `p = inf` norms carry their unit polygon so every exact
/// polygon routine applies to them as well.
#[derive(Debug, Clone, PartialEq)]
pub struct NormSpec {
    kind: NormKind,
    exact: Option<Polygon>,
}

/// `‖x‖_a` together with a unit vector attaining the supremum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntinormValue {
    pub value: f64,
    /// Maximizer `z` of `|[x, z]|` on the unit circle, oriented so that
    /// `[x, z] >= 0`. It satisfies `z ⊣_B x`.
    pub witness: Vec2,
}

/// Outcome of sampling the ratio `‖x‖_a / ‖x‖` around the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadonReport {
    pub is_radon: bool,
    /// Midpoint of the observed ratio range.
    pub lambda: f64,
    /// `max - min` of the ratio over the samples.
    pub spread: f64,
}

/// Which circle [`NormSpec::emit_circle`] traces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Circle {
    Unit,
    Anticircle,
}

impl NormSpec {
    pub fn euclidean() -> Self {
        NormSpec {
            kind: NormKind::Euclidean,
            exact: None,
        }
    }

    /// The `ℓp` norm; `p = f64::INFINITY` gives the max norm.
    pub fn lp(p: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidNorm("p must be ≥ 1".into()));
        }
        let exact = if p == 1.0 {
            Some(Polygon::new(&[Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)])?)
        } else if p == f64::INFINITY {
            Some(Polygon::new(&[Vec2::new(1.0, 1.0), Vec2::new(-1.0, 1.0)])?)
        } else {
            None
        };
        Ok(NormSpec {
            kind: NormKind::Lp { p },
            exact,
        })
    }

    /// The max norm.
    pub fn max_norm() -> Self {
        NormSpec::lp(f64::INFINITY).expect("p = inf is valid")
    }

    /// Polygonal norm from counterclockwise half-vertices; see [`Polygon::new`].
    pub fn polygon(half_vertices: &[Vec2]) -> Result<Self> {
        Ok(NormSpec::from_polygon(Polygon::new(half_vertices)?))
    }

    pub fn from_polygon(poly: Polygon) -> Self {
        NormSpec {
            kind: NormKind::Polygon(poly.clone()),
            exact: Some(poly),
        }
    }

    /// Regular `n`-gon (n even) inscribed in the Euclidean unit circle with a
    /// vertex at `(1, 0)`.
    pub fn regular_polygon(n: usize) -> Result<Self> {
        Ok(NormSpec::from_polygon(Polygon::regular(n, 0.0)?))
    }

    pub fn kind(&self) -> &NormKind {
        &self.kind
    }

    /// The unit polygon when the norm is polygonal (including `p = 1, inf`).
    pub fn polygon_ref(&self) -> Option<&Polygon> {
        self.exact.as_ref()
    }

    /// Short human-readable label.
    pub fn label(&self) -> String {
        match &self.kind {
            NormKind::Euclidean => "euclidean".into(),
            NormKind::Lp { p } if p.is_infinite() => "lp(inf)".into(),
            NormKind::Lp { p } => format!("lp({p})"),
            NormKind::Polygon(poly) => format!("polygon({})", poly.vertices().len()),
        }
    }

    /// The Minkowski functional of the unit ball.
    pub fn gauge(&self, x: Vec2) -> f64 {
        if let Some(poly) = &self.exact {
            return poly.gauge(x);
        }
        match self.kind {
            NormKind::Euclidean => x.euclid(),
            NormKind::Lp { p } => lp_norm(x, p),
            NormKind::Polygon(_) => unreachable!("polygon norms carry their polygon"),
        }
    }

    /// `x / ‖x‖`, rejecting the zero vector.
    pub fn normalize(&self, x: Vec2) -> Result<Vec2> {
        if !x.is_finite() {
            return Err(Error::InvalidArgument("non-finite vector".into()));
        }
        if x.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(x / self.gauge(x))
    }

    /// Point of the unit circle in Euclidean direction `theta`.
    pub fn unit_point(&self, theta: f64) -> Vec2 {
        let d = Vec2::from_angle(theta);
        d / self.gauge(d)
    }

    /// One-sided directional derivative `lim_{h->0+} (‖x + h d‖ - ‖x‖) / h`.
    pub fn gauge_derivative(&self, x: Vec2, d: Vec2) -> f64 {
        if let Some(poly) = &self.exact {
            return poly.gauge_derivative(x, d);
        }
        let g = self.gauge(x);
        if g == 0.0 {
            return self.gauge(d);
        }
        match self.kind {
            NormKind::Euclidean => x.dot(d) / g,
            NormKind::Lp { p } => {
                let grad = |c: f64| c.signum() * (c.abs() / g).powf(p - 1.0);
                grad(x.x) * d.x + grad(x.y) * d.y
            }
            NormKind::Polygon(_) => unreachable!(),
        }
    }

    /// `‖x‖_a = sup_{‖z‖=1} |[x, z]|` with a maximizing witness.
    pub fn antinorm(&self, x: Vec2) -> Result<AntinormValue> {
        if x.is_zero() {
            return Err(Error::ZeroVector);
        }
        let (value, witness) = self.antinorm_raw(x);
        Ok(AntinormValue { value, witness })
    }

    pub(crate) fn antinorm_raw(&self, x: Vec2) -> (f64, Vec2) {
        if let Some(poly) = &self.exact {
            return poly.antinorm(x);
        }
        let u = x.perp();
        match self.kind {
            NormKind::Euclidean => {
                let r = u.euclid();
                (r, u / r)
            }
            NormKind::Lp { p } => {
                // Dual norm of the quarter-turned vector, Hölder equality case
                // for the witness.
                let q = dual_exponent(p);
                let value = lp_norm(u, q);
                let m = u.x.abs().max(u.y.abs());
                let w = Vec2::new(
                    u.x.signum() * (u.x.abs() / m).powf(q - 1.0),
                    u.y.signum() * (u.y.abs() / m).powf(q - 1.0),
                );
                (value, w / lp_norm(w, p))
            }
            NormKind::Polygon(_) => unreachable!(),
        }
    }

    /// The antinorm value alone; zero for the zero vector.
    pub fn antinorm_value(&self, x: Vec2) -> f64 {
        if x.is_zero() {
            0.0
        } else {
            self.antinorm_raw(x).0
        }
    }

    /// The antinorm as a norm in its own right, when it has a closed form:
    /// Euclidean stays Euclidean, `ℓp` becomes `ℓq`, polygons map to their
    /// anti-polygon.
    pub fn antinorm_spec(&self) -> Result<NormSpec> {
        match &self.kind {
            NormKind::Euclidean => Ok(NormSpec::euclidean()),
            NormKind::Lp { p } => NormSpec::lp(dual_exponent(*p)),
            NormKind::Polygon(poly) => Ok(NormSpec::from_polygon(poly.anti_polygon()?)),
        }
    }

    /// Samples `‖x‖_a / ‖x‖` on `n_samples` directions of a half-turn (plus
    /// vertices, edge midpoints and edge directions for polygons) and reports
    /// whether it is constant within `tol`.
    pub fn is_radon(&self, n_samples: usize, tol: f64) -> Result<RadonReport> {
        if n_samples < 8 {
            return Err(Error::InvalidArgument(format!(
                "is_radon needs at least 8 samples, got {n_samples}"
            )));
        }
        let (lo, hi) = self.ratio_extremes(n_samples);
        let spread = hi.1 - lo.1;
        Ok(RadonReport {
            is_radon: spread <= tol,
            lambda: 0.5 * (lo.1 + hi.1),
            spread,
        })
    }

    /// Directions minimizing and maximizing `‖x‖_a / ‖x‖` among the samples.
    pub(crate) fn ratio_extremes(&self, n_samples: usize) -> ((Vec2, f64), (Vec2, f64)) {
        let mut dirs: Vec<Vec2> = (0..n_samples)
            .map(|k| Vec2::from_angle(PI * k as f64 / n_samples as f64))
            .collect();
        if let Some(poly) = &self.exact {
            dirs.extend(poly.feature_directions());
        }
        let mut lo = (Vec2::ZERO, f64::INFINITY);
        let mut hi = (Vec2::ZERO, f64::NEG_INFINITY);
        for d in dirs {
            let r = self.antinorm_value(d) / self.gauge(d);
            if r < lo.1 {
                lo = (d, r);
            }
            if r > hi.1 {
                hi = (d, r);
            }
        }
        (lo, hi)
    }

    /// `n` points of the unit circle or anticircle, counterclockwise from
    /// direction `(1, 0)`.
    pub fn emit_circle(&self, which: Circle, n: usize) -> Result<Vec<Vec2>> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "a circle needs at least 3 points, got {n}"
            )));
        }
        Ok((0..n)
            .map(|k| {
                let d = turn_direction(k, n);
                match which {
                    Circle::Unit => d / self.gauge(d),
                    Circle::Anticircle => d / self.antinorm_value(d),
                }
            })
            .collect())
    }
}

/// Euclidean unit direction at `k / n` of a full turn, exact on the axes.
pub fn turn_direction(k: usize, n: usize) -> Vec2 {
    let k = k % n;
    if (4 * k) % n == 0 {
        match 4 * k / n {
            0 => return Vec2::new(1.0, 0.0),
            1 => return Vec2::new(0.0, 1.0),
            2 => return Vec2::new(-1.0, 0.0),
            _ => return Vec2::new(0.0, -1.0),
        }
    }
    Vec2::from_angle(TAU * k as f64 / n as f64)
}

/// Hölder conjugate `q` with `1/p + 1/q = 1`.
pub fn dual_exponent(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

fn lp_norm(x: Vec2, p: f64) -> f64 {
    let (a, b) = (x.x.abs(), x.y.abs());
    if p == 2.0 {
        return a.hypot(b);
    }
    if p == 1.0 {
        return a + b;
    }
    if p.is_infinite() {
        return a.max(b);
    }
    let m = a.max(b);
    if m == 0.0 {
        return 0.0;
    }
    m * ((a / m).powf(p) + (b / m).powf(p)).powf(1.0 / p)
}
