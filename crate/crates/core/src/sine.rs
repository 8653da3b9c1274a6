//! The generalized sine `s(x, y)`, polar coordinates over a conjugate basis
//! and attainment of prescribed sine values.

use crate::error::{Error, Result};
use crate::norm::NormSpec;
use crate::optim::bisect;
use crate::orthogonality::{birkhoff_defect, conjugate_pairs, ConjugatePair, PARALLEL_EPS};
use crate::vec2::Vec2;

/// How a [`SineValue`] was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Direct,
    AntinormFormula,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::AntinormFormula => "antinorm-formula",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineValue {
    pub value: f64,
    /// Minimizer of `t -> ‖x̂ + t ŷ‖` for the unit representatives.
    pub t_star: f64,
    pub method: Method,
}

fn unit_pair(spec: &NormSpec, x: Vec2, y: Vec2) -> Result<(Vec2, Vec2)> {
    Ok((spec.normalize(x)?, spec.normalize(y)?))
}

/// `inf_t ‖x̂ + t ŷ‖` by direct minimization.
pub fn sine_direct(spec: &NormSpec, x: Vec2, y: Vec2) -> Result<SineValue> {
    let (xh, yh) = unit_pair(spec, x, y)?;
    let d = birkhoff_defect(spec, xh, yh)?;
    Ok(SineValue {
        value: d.min_value.clamp(0.0, 1.0),
        t_star: d.t_star,
        method: Method::Direct,
    })
}

/// `|[x, y]| / (‖y‖_a ‖x‖)`.
pub fn sine(spec: &NormSpec, x: Vec2, y: Vec2) -> Result<SineValue> {
    let (xh, yh) = unit_pair(spec, x, y)?;
    let det = xh.det(yh);
    if det.abs() <= PARALLEL_EPS {
        return Ok(SineValue {
            value: 0.0,
            t_star: -xh.dot(yh) / yh.dot(yh),
            method: Method::AntinormFormula,
        });
    }
    let (a, w) = spec.antinorm_raw(yh);
    Ok(SineValue {
        value: (det.abs() / a).clamp(0.0, 1.0),
        t_star: -xh.det(w) / a,
        method: Method::AntinormFormula,
    })
}

/// Sine value only; zero vectors count as parallel.
pub(crate) fn sine_value(spec: &NormSpec, x: Vec2, y: Vec2) -> f64 {
    sine(spec, x, y).map(|s| s.value).unwrap_or(0.0)
}

/// The sine of the antinorm plane, `s_a(x, y) = s(y, x)`.
pub fn sine_antinorm(spec: &NormSpec, x: Vec2, y: Vec2) -> Result<SineValue> {
    sine(spec, y, x)
}

/// Coefficients of `z = alpha x + beta y` over a conjugate basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarCoords {
    pub alpha: f64,
    pub beta: f64,
}

/// Solves `z = alpha x + beta y` and checks `|alpha| = ‖z‖ s(z, y)`,
/// `|beta| = ‖z‖ s(z, x)` within `1e-8`.
pub fn polar_coords(spec: &NormSpec, pair: &ConjugatePair, z: Vec2) -> Result<PolarCoords> {
    if z.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (x, y) = (pair.x, pair.y);
    let den = x.det(y);
    if den.abs() <= PARALLEL_EPS * x.euclid() * y.euclid() {
        return Err(Error::SingularMap);
    }
    let alpha = z.det(y) / den;
    let beta = x.det(z) / den;
    let gz = spec.gauge(z);
    let ea = (alpha.abs() - gz * sine_value(spec, z, y)).abs();
    let eb = (beta.abs() - gz * sine_value(spec, z, x)).abs();
    if ea.max(eb) > 1e-8 * gz.max(1.0) {
        return Err(Error::NotConjugate(format!(
            "polar identity off by {:.3e}",
            ea.max(eb)
        )));
    }
    Ok(PolarCoords { alpha, beta })
}

/// Checks `s(x, y) = s(y, x) = 1` within `1e-8`.
pub(crate) fn check_pair(spec: &NormSpec, pair: &ConjugatePair) -> Result<()> {
    let s1 = sine(spec, pair.x, pair.y)?.value;
    let s2 = sine(spec, pair.y, pair.x)?.value;
    if s1 < 1.0 - 1e-8 || s2 < 1.0 - 1e-8 {
        return Err(Error::NotConjugate(format!(
            "s(x,y) = {s1:.12}, s(y,x) = {s2:.12}"
        )));
    }
    Ok(())
}

pub(crate) fn conjugate_range_unchecked(spec: &NormSpec, pair: &ConjugatePair, z: Vec2) -> f64 {
    sine_value(spec, z, pair.x).powi(2) + sine_value(spec, z, pair.y).powi(2)
}

/// `s(z, x)² + s(z, y)²`, which lies in `[1/2, 2]` for conjugate `x`, `y`.
pub fn conjugate_range(spec: &NormSpec, pair: &ConjugatePair, z: Vec2) -> Result<f64> {
    if z.is_zero() {
        return Err(Error::ZeroVector);
    }
    check_pair(spec, pair)?;
    Ok(conjugate_range_unchecked(spec, pair, z))
}

/// Directions `(z, y)` with `s(z, y) = eps`: for a conjugate pair `(x, y)`,
/// `z` is where the line through `eps x` parallel to `y` meets the unit
/// circle.
pub fn find_pair_with_sine(spec: &NormSpec, eps: f64) -> Result<(Vec2, Vec2)> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::InvalidArgument(format!(
            "eps must lie in [0, 1], got {eps}"
        )));
    }
    let pair = conjugate_pairs(spec, 256)?[0];
    let (x, y) = (pair.x, pair.y);
    if eps == 0.0 {
        return Ok((y, y));
    }
    if eps == 1.0 {
        return Ok((x, y));
    }
    // ‖eps x‖ = eps < 1 and ‖eps x + y‖ >= 1 because y ⊣_B x.
    let t = bisect(|t| spec.gauge(x * eps + y * t) - 1.0, 0.0, 1.0, 1e-15);
    let z = spec.normalize(x * eps + y * t)?;
    let got = sine(spec, z, y)?.value;
    if (got - eps).abs() > 1e-8 {
        return Err(Error::Accuracy(format!(
            "constructed sine {got} differs from {eps}"
        )));
    }
    Ok((z, y))
}
