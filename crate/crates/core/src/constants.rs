//! The constants `c_E` (distance from Euclidean), `c_R` (distance from
//! Radon) and `D(X)` (gap between isosceles and Birkhoff orthogonality).

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::Result;
use crate::norm::NormSpec;
use crate::optim::{golden_section_max, golden_section_min, pattern_search_max};
use crate::orthogonality::{conjugate_families, isosceles_partners, ConjugatePair};
use crate::sine::{check_pair, conjugate_range_unchecked, sine_antinorm, sine_value};
use crate::vec2::Vec2;

pub const DEFAULT_GRID: usize = 1024;
pub const DEFAULT_GRID_2D: usize = 512;
/// Rays sampled per cone of conjugate directions.
pub const CONE_RAYS: usize = 17;
/// Direction scan used to locate conjugate pairs of smooth norms.
const CONJUGATE_SCAN: usize = 256;
/// Samples per half-turn when locating isosceles partners.
const PARTNER_SAMPLES: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantName {
    CEPair,
    CE,
    CR,
    D,
}

impl ConstantName {
    pub fn as_str(self) -> &'static str {
        match self {
            ConstantName::CEPair => "c_E_pair",
            ConstantName::CE => "c_E",
            ConstantName::CR => "c_R",
            ConstantName::D => "D",
        }
    }
}

/// Value of a constant with its extremal vectors and search diagnostics.
///
/// Witnesses: `[z_sup, z_inf]` for `c_E_pair`, the extremal pair `[x, y]`
/// otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantReport {
    pub name: ConstantName,
    pub value: f64,
    pub witness: Vec<Vec2>,
    pub grid: usize,
    pub refined: bool,
}

fn check_grid(grid: usize) -> Result<()> {
    if grid < 256 {
        return Err(crate::Error::InvalidArgument(format!(
            "grid must be at least 256, got {grid}"
        )));
    }
    Ok(())
}

/// Angles in `[0, π)` of the directions `dirs`.
fn half_turn_angles(dirs: impl IntoIterator<Item = Vec2>) -> Vec<f64> {
    dirs.into_iter().map(|d| d.line_angle()).collect()
}

/// Samples `f` on `grid` angles of a half-turn plus `extra`, then refines the
/// best sample by golden-section search over the neighbouring cells. Returns
/// `(angle, value)`; the refined value never loses against the coarse one.
fn scan_extremum<F>(f: F, grid: usize, extra: &[f64], maximize: bool) -> (f64, f64)
where
    F: Fn(f64) -> f64 + Sync,
{
    let mut thetas: Vec<f64> = (0..grid).map(|k| PI * k as f64 / grid as f64).collect();
    thetas.extend_from_slice(extra);
    let vals: Vec<f64> = thetas.par_iter().map(|&t| f(t)).collect();
    let better = |a: f64, b: f64| if maximize { a > b } else { a < b };
    let mut best = (thetas[0], vals[0]);
    for (&t, &v) in thetas.iter().zip(&vals) {
        if better(v, best.1) {
            best = (t, v);
        }
    }
    let h = PI / grid as f64;
    let (a, b) = (best.0 - h, best.0 + h);
    let refined = if maximize {
        golden_section_max(&f, a, b, 1e-13)
    } else {
        golden_section_min(&f, a, b, 1e-13)
    };
    if better(refined.1, best.1) {
        refined
    } else {
        best
    }
}

/// `sup_z (s(z,x)² + s(z,y)²) - inf_z (...)` over unit `z`.
pub fn c_e_pair(spec: &NormSpec, pair: &ConjugatePair, grid: usize) -> Result<ConstantReport> {
    check_grid(grid)?;
    check_pair(spec, pair)?;
    let (x, y) = (pair.x, pair.y);
    let mut extra = half_turn_angles([x, y, x + y, y - x]);
    if let Some(poly) = spec.polygon_ref() {
        extra.extend(half_turn_angles(poly.feature_directions()));
    }
    let f = |t: f64| conjugate_range_unchecked(spec, pair, spec.unit_point(t));
    let (t_sup, sup) = scan_extremum(f, grid, &extra, true);
    let (t_inf, inf) = scan_extremum(f, grid, &extra, false);
    Ok(ConstantReport {
        name: ConstantName::CEPair,
        value: (sup - inf).max(0.0),
        witness: vec![spec.unit_point(t_sup), spec.unit_point(t_inf)],
        grid,
        refined: true,
    })
}

/// Maximum of [`c_e_pair`] over all conjugate pairs, sampling 17 rays of
/// every cone of conjugates.
pub fn c_e(spec: &NormSpec, grid: usize) -> Result<ConstantReport> {
    check_grid(grid)?;
    let pairs: Vec<ConjugatePair> = conjugate_families(spec, CONJUGATE_SCAN)?
        .iter()
        .flat_map(|f| f.pairs(spec, CONE_RAYS))
        .collect();
    let reports: Vec<Result<ConstantReport>> =
        pairs.par_iter().map(|p| c_e_pair(spec, p, grid)).collect();
    let mut best: Option<(f64, &ConjugatePair)> = None;
    for (p, r) in pairs.iter().zip(reports) {
        let v = r?.value;
        if best.map_or(true, |b| v > b.0) {
            best = Some((v, p));
        }
    }
    let (value, p) = best.expect("conjugate_families is never empty");
    Ok(ConstantReport {
        name: ConstantName::CE,
        value,
        witness: vec![p.x, p.y],
        grid,
        refined: true,
    })
}

/// `sup_{x,y ∈ S} |s(x,y) - s(y,x)|`.
pub fn c_r(spec: &NormSpec, grid: usize) -> Result<ConstantReport> {
    // For unit x, y: |s(x,y) - s(y,x)| = |[x,y]| |1/‖y‖_a - 1/‖x‖_a|.
    c_r_by(spec, grid, |spec, x, y| {
        let ax = spec.antinorm_value(x);
        let ay = spec.antinorm_value(y);
        x.det(y).abs() * (1.0 / ay - 1.0 / ax).abs()
    })
}

/// [`c_r`] evaluated with the antinorm-plane sine `s_a(x,y) = s(y,x)` in
/// place of `s`.
pub fn c_r_antinorm(spec: &NormSpec, grid: usize) -> Result<ConstantReport> {
    c_r_by(spec, grid, |spec, x, y| {
        let a = sine_antinorm(spec, x, y).map(|s| s.value).unwrap_or(0.0);
        let b = sine_antinorm(spec, y, x).map(|s| s.value).unwrap_or(0.0);
        (a - b).abs()
    })
}

fn c_r_by<F>(spec: &NormSpec, grid: usize, gap: F) -> Result<ConstantReport>
where
    F: Fn(&NormSpec, Vec2, Vec2) -> f64 + Sync,
{
    check_grid(grid)?;
    let f = |p: [f64; 2]| gap(spec, spec.unit_point(p[0]), spec.unit_point(p[1]));
    let h = PI / grid as f64;
    let rows: Vec<(f64, [f64; 2])> = (0..grid)
        .into_par_iter()
        .map(|i| {
            let mut best = (f64::NEG_INFINITY, [0.0, 0.0]);
            for j in 0..grid {
                let p = [h * i as f64, h * j as f64];
                let v = f(p);
                if v > best.0 {
                    best = (v, p);
                }
            }
            best
        })
        .collect();
    let mut best = (f64::NEG_INFINITY, [0.0, 0.0]);
    for r in rows {
        if r.0 > best.0 {
            best = r;
        }
    }
    if let Some(poly) = spec.polygon_ref() {
        let angles = half_turn_angles(poly.feature_directions());
        for &a in &angles {
            for &b in &angles {
                let v = f([a, b]);
                if v > best.0 {
                    best = (v, [a, b]);
                }
            }
        }
    }
    let refined = pattern_search_max(f, best.1, h, 0.5, 60);
    let (value, p) = if refined.value > best.0 {
        (refined.value, refined.point)
    } else {
        best
    };
    let (mut x, mut y) = (spec.unit_point(p[0]), spec.unit_point(p[1]));
    if sine_value(spec, x, y) < sine_value(spec, y, x) {
        std::mem::swap(&mut x, &mut y);
    }
    Ok(ConstantReport {
        name: ConstantName::CR,
        value,
        witness: vec![x, y],
        grid,
        refined: true,
    })
}

/// Smallest sine over the isosceles partners of `u(theta)`; infinite when
/// no partner was found.
fn min_partner_sine(spec: &NormSpec, theta: f64) -> (f64, Vec2) {
    let x = spec.unit_point(theta);
    isosceles_partners(spec, x, PARTNER_SAMPLES)
        .into_iter()
        .map(|y| (sine_value(spec, x, y), y))
        .fold((f64::INFINITY, x), |a, b| if b.0 < a.0 { b } else { a })
}

/// `inf { s(x,y) : x, y ∈ S, x ⊣_I y }`.
pub fn d_constant(spec: &NormSpec, grid: usize) -> Result<ConstantReport> {
    check_grid(grid)?;
    let extra = spec
        .polygon_ref()
        .map(|p| half_turn_angles(p.vertices().iter().copied()))
        .unwrap_or_default();
    let (theta, value) = scan_extremum(|t| min_partner_sine(spec, t).0, grid, &extra, false);
    let (_, y) = min_partner_sine(spec, theta);
    Ok(ConstantReport {
        name: ConstantName::D,
        value: value.clamp(0.0, 1.0),
        witness: vec![spec.unit_point(theta), y],
        grid,
        refined: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sine::{conjugate_range, sine};
    use crate::orthogonality::is_isosceles;
    use proptest::prelude::*;

    const S3: f64 = 0.866_025_403_784_438_6;

    fn v(x: f64, y: f64) -> Vec2 {
        Vec2::new(x, y)
    }

    /// Exhaustive boundary evaluation of the conjugate range.
    fn range_oracle(spec: &NormSpec, pair: &ConjugatePair, n: usize) -> (f64, f64) {
        (0..n)
            .map(|k| conjugate_range(spec, pair, spec.unit_point(PI * k as f64 / n as f64)).unwrap())
            .fold((f64::NEG_INFINITY, f64::INFINITY), |(hi, lo), r| (hi.max(r), lo.min(r)))
    }

    #[test]
    fn c_e_pair_examples() {
        let e = NormSpec::euclidean();
        let pair = ConjugatePair::verified(&e, v(1.0, 0.0), v(0.0, 1.0), 1e-9).unwrap();
        assert!(c_e_pair(&e, &pair, 256).unwrap().value < 1e-12);

        let h = NormSpec::regular_polygon(6).unwrap();
        let pair = ConjugatePair::verified(&h, v(1.0, 0.0), v(-0.5, S3), 1e-9).unwrap();
        let r = c_e_pair(&h, &pair, 256).unwrap();
        let (hi, lo) = range_oracle(&h, &pair, 6000);
        assert!((hi - lo - 1.5).abs() < 1e-12);
        assert!((r.value - 1.5).abs() < 1e-12);
        let re = conjugate_range(&h, &pair, r.witness[0]).unwrap()
            - conjugate_range(&h, &pair, r.witness[1]).unwrap();
        assert!((re - r.value).abs() < 1e-7);

        let m = NormSpec::max_norm();
        let pair = ConjugatePair::verified(&m, v(1.0, 0.0), v(0.0, 1.0), 1e-9).unwrap();
        let (hi, lo) = range_oracle(&m, &pair, 4000);
        assert!((hi - 2.0).abs() < 1e-12 && (lo - 1.0).abs() < 1e-12);
        assert!((c_e_pair(&m, &pair, 256).unwrap().value - 1.0).abs() < 1e-12);
        assert!(c_e_pair(&m, &pair, 100).is_err());
    }

    #[test]
    fn c_e_examples() {
        assert!(c_e(&NormSpec::euclidean(), 256).unwrap().value < 1e-8);
        let r = c_e(&NormSpec::regular_polygon(6).unwrap(), 256).unwrap();
        assert!((r.value - 1.5).abs() < 1e-6);
        let m = NormSpec::max_norm();
        let r = c_e(&m, 256).unwrap();
        assert!((r.value - 1.0).abs() < 1e-9);
        let pair = ConjugatePair::verified(&m, r.witness[0], r.witness[1], 1e-9).unwrap();
        assert!((c_e_pair(&m, &pair, 256).unwrap().value - r.value).abs() < 1e-7);
        let pair = ConjugatePair::verified(&m, v(1.0, 1.0), v(-1.0, 1.0), 1e-9).unwrap();
        assert!((c_e_pair(&m, &pair, 256).unwrap().value - 0.5).abs() < 1e-9);
    }

    #[test]
    fn c_r_examples() {
        let m = NormSpec::max_norm();
        let r = c_r(&m, 256).unwrap();
        assert!((r.value - 0.5).abs() < 1e-9);
        let (x, y) = (r.witness[0], r.witness[1]);
        let d = sine(&m, x, y).unwrap().value - sine(&m, y, x).unwrap().value;
        assert!((d - r.value).abs() < 1e-7);
        assert!((sine(&m, v(1.0, 1.0), v(1.0, 0.0)).unwrap().value - 1.0).abs() < 1e-15);

        assert!(c_r(&NormSpec::regular_polygon(6).unwrap(), 256).unwrap().value < 1e-8);
        let oct = c_r(&NormSpec::regular_polygon(8).unwrap(), 256).unwrap();
        let expected = (PI / 8.0).sin().powi(2);
        assert!((oct.value - expected).abs() < 1e-6);
    }

    #[test]
    fn c_r_antinorm_invariance() {
        for spec in [NormSpec::max_norm(), NormSpec::regular_polygon(8).unwrap(), NormSpec::lp(3.0).unwrap()] {
            let base = c_r(&spec, 256).unwrap().value;
            let sub = c_r_antinorm(&spec, 256).unwrap().value;
            let dual = c_r(&spec.antinorm_spec().unwrap(), 256).unwrap().value;
            assert!((base - sub).abs() < 1e-6, "{}", spec.label());
            assert!((base - dual).abs() < 1e-6, "{} {base} {dual}", spec.label());
        }
    }

    #[test]
    fn c_r_affine_invariance() {
        let oct = NormSpec::regular_polygon(8).unwrap();
        let (a, b, c, d) = (1.3, 0.4, -0.2, 0.9);
        let mapped: Vec<Vec2> = oct
            .polygon_ref()
            .unwrap()
            .half_vertices()
            .iter()
            .map(|p| v(a * p.x + b * p.y, c * p.x + d * p.y))
            .collect();
        let t = NormSpec::polygon(&mapped).unwrap();
        let base = c_r(&oct, 256).unwrap().value;
        assert!((c_r(&t, 256).unwrap().value - base).abs() < 1e-6);
    }

    #[test]
    fn d_examples() {
        let r = d_constant(&NormSpec::euclidean(), 256).unwrap();
        assert!((r.value - 1.0).abs() < 1e-9);
        for spec in [NormSpec::max_norm(), NormSpec::regular_polygon(6).unwrap()] {
            let r = d_constant(&spec, 256).unwrap();
            assert!(r.value > 0.0 && r.value <= 1.0);
            let (x, y) = (r.witness[0], r.witness[1]);
            assert!(is_isosceles(&spec, x, y, 1e-9).unwrap());
            assert!((sine(&spec, x, y).unwrap().value - r.value).abs() < 1e-7);
        }
    }

    #[test]
    fn reports_within_ranges() {
        for spec in [NormSpec::lp(1.5).unwrap(), NormSpec::regular_polygon(10).unwrap()] {
            let e = c_e(&spec, 256).unwrap().value;
            let r = c_r(&spec, 256).unwrap().value;
            let d = d_constant(&spec, 256).unwrap().value;
            assert!((-1e-9..=1.5 + 1e-9).contains(&e));
            assert!((-1e-9..=0.5 + 1e-9).contains(&r));
            assert!((-1e-9..=1.0 + 1e-9).contains(&d));
        }
    }

    #[test]
    fn deterministic() {
        let h = NormSpec::lp(3.0).unwrap();
        assert_eq!(c_r(&h, 256).unwrap(), c_r(&h, 256).unwrap());
        assert_eq!(d_constant(&h, 256).unwrap(), d_constant(&h, 256).unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn refinement_is_monotone(p in 1.1..6.0f64) {
            let spec = NormSpec::lp(p).unwrap();
            let grid = 256;
            let h = PI / grid as f64;
            let coarse = (0..grid)
                .flat_map(|i| (0..grid).map(move |j| (i, j)))
                .map(|(i, j)| {
                    let (x, y) = (spec.unit_point(h * i as f64), spec.unit_point(h * j as f64));
                    (sine(&spec, x, y).unwrap().value - sine(&spec, y, x).unwrap().value).abs()
                })
                .fold(0.0, f64::max);
            prop_assert!(c_r(&spec, grid).unwrap().value >= coarse - 1e-12);
        }
    }
}
