//! The twelve acceptance checks, shared by the `reproduce` subcommand and
//! the `acceptance` test target.

use std::f64::consts::{PI, TAU};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constants::{c_e, c_r, d_constant, DEFAULT_GRID, DEFAULT_GRID_2D};
use crate::norm::NormSpec;
use crate::optim::bisect;
use crate::orthogonality::{
    benitez_alpha, birkhoff_defect, conjugate_pairs, find_orthogonal_diagonals, is_birkhoff,
    isosceles_partners, ConjugatePair,
};
use crate::sine::{conjugate_range, sine, sine_direct};
use crate::trig::{
    busemann_bisector, equal_sines_equal_sides, glogovskii_bisector,
    isosceles_sine_characterization, law_of_sines, reflection_roberts_check, Triangle,
};
use crate::vec2::Vec2;

const S3: f64 = 0.866_025_403_784_438_6;

/// Result of one acceptance criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

/// The reference norms: Euclidean, `ℓp` for `p` in {1, 1.5, 3, ∞}, and the
/// regular hexagon and octagon.
pub fn reference_norms() -> Vec<NormSpec> {
    vec![
        NormSpec::euclidean(),
        NormSpec::lp(1.0).expect("p = 1"),
        NormSpec::lp(1.5).expect("p = 1.5"),
        NormSpec::lp(3.0).expect("p = 3"),
        NormSpec::max_norm(),
        hexagon(),
        NormSpec::regular_polygon(8).expect("octagon"),
    ]
}

fn hexagon() -> NormSpec {
    NormSpec::regular_polygon(6).expect("hexagon")
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn angle(r: &mut ChaCha8Rng) -> f64 {
    r.gen_range(0.0..TAU)
}

fn random_triangle(r: &mut ChaCha8Rng, pick: impl Fn(&mut ChaCha8Rng) -> Vec2) -> Triangle {
    loop {
        let (a, b, c) = (pick(r), pick(r), pick(r));
        if let Ok(t) = Triangle::new(a, b, c) {
            if (b - a).det(c - a).abs() > 1e-6 {
                return t;
            }
        }
    }
}

fn outcome(id: u8, name: &'static str, passed: bool, detail: String) -> Outcome {
    Outcome { id, name, passed, detail }
}

/// 1. `sine` matches `√(1 - <x,y>²)` on the Euclidean plane.
pub fn euclidean_consistency() -> Outcome {
    let e = NormSpec::euclidean();
    let mut r = rng(1);
    let mut max_err: f64 = 0.0;
    for _ in 0..10_000 {
        let (x, y) = (Vec2::from_angle(angle(&mut r)), Vec2::from_angle(angle(&mut r)));
        let c = x.dot(y);
        let exact = (1.0 - c * c).max(0.0).sqrt();
        max_err = max_err.max((sine(&e, x, y).map(|s| s.value).unwrap_or(f64::NAN) - exact).abs());
    }
    outcome(1, "euclidean consistency", max_err <= 1e-10, format!("max error {max_err:.3e} over 10000 pairs (tol 1e-10)"))
}

/// 2. Antinorm formula against direct minimization.
pub fn oracle_equivalence() -> Outcome {
    let norms = reference_norms();
    let mut r = rng(2);
    let triples: Vec<(usize, Vec2, Vec2)> = (0..10_000)
        .map(|i| {
            let s = r.gen_range(0.1..10.0);
            (i % norms.len(), Vec2::from_angle(angle(&mut r)) * s, Vec2::from_angle(angle(&mut r)))
        })
        .collect();
    let errs: Vec<f64> = triples
        .par_iter()
        .map(|&(k, x, y)| {
            let f = sine(&norms[k], x, y).map(|s| s.value);
            let d = sine_direct(&norms[k], x, y).map(|s| s.value);
            match (f, d) {
                (Ok(f), Ok(d)) => (f - d).abs(),
                _ => f64::INFINITY,
            }
        })
        .collect();
    let max_err = errs.iter().copied().fold(0.0, f64::max);
    outcome(2, "oracle equivalence", max_err <= 1e-8, format!("max |formula - direct| {max_err:.3e} over 10000 triples, 7 norms (tol 1e-8)"))
}

/// 3. `0 <= s <= 1`, `s = 1` iff Birkhoff, `s = 0` iff parallel.
pub fn range_degeneracy() -> Outcome {
    let mut failures = 0usize;
    let mut total = 0usize;
    for (k, spec) in reference_norms().iter().enumerate() {
        let mut r = rng(300 + k as u64);
        let pairs: Vec<(Vec2, Vec2)> = (0..5000)
            .map(|i| {
                let y = spec.unit_point(angle(&mut r));
                match i % 5 {
                    // x with x ⊣_B y
                    0 | 1 => (spec.antinorm(y).expect("unit").witness, y),
                    2 => (y * -r.gen_range(0.5..2.0), y),
                    _ => (spec.unit_point(angle(&mut r)), y),
                }
            })
            .collect();
        let bad: usize = pairs
            .par_iter()
            .map(|&(x, y)| {
                let s = sine(spec, x, y).map(|s| s.value).unwrap_or(f64::NAN);
                let in_range = (0.0..=1.0).contains(&s);
                let birkhoff = is_birkhoff(spec, x, y, 1e-8).unwrap_or(false);
                let parallel = x.euclid_sin(y).abs() <= 1e-8;
                let ok = in_range && (s >= 1.0 - 1e-8) == birkhoff && (s <= 1e-8) == parallel;
                usize::from(!ok)
            })
            .sum();
        failures += bad;
        total += pairs.len();
    }
    outcome(3, "range and degeneracy", failures == 0, format!("{failures} violations in {total} pairs (tol 1e-8)"))
}

/// 4. Symmetric sine on the hexagon, maximal asymmetry on the max norm.
pub fn radon_symmetry() -> Outcome {
    let h = hexagon();
    let mut r = rng(4);
    let mut hex_max: f64 = 0.0;
    for _ in 0..1000 {
        let (x, y) = (h.unit_point(angle(&mut r)), h.unit_point(angle(&mut r)));
        let d = sine(&h, x, y).map(|s| s.value).unwrap_or(f64::NAN) - sine(&h, y, x).map(|s| s.value).unwrap_or(f64::NAN);
        hex_max = hex_max.max(d.abs());
    }
    let m = NormSpec::max_norm();
    let n = 64;
    let mut sq_max: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (m.unit_point(PI * i as f64 / n as f64), m.unit_point(PI * j as f64 / n as f64));
            if let (Ok(a), Ok(b)) = (sine(&m, x, y), sine(&m, y, x)) {
                sq_max = sq_max.max((a.value - b.value).abs());
            }
        }
    }
    let passed = hex_max <= 1e-9 && sq_max >= 0.499;
    outcome(4, "radon symmetry dichotomy", passed, format!("hexagon max |s(x,y)-s(y,x)| {hex_max:.3e} (tol 1e-9); max norm best gap {sq_max:.6} (need >= 0.499)"))
}

/// 5. `c_R` of the regular `4n`-gon is `sin²(π/4n)`.
pub fn rectilinear_table() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut rows = Vec::new();
    for n in 1..=6usize {
        let spec = NormSpec::regular_polygon(4 * n).expect("regular 4n-gon");
        let expected = (PI / (4 * n) as f64).sin().powi(2);
        let got = c_r(&spec, DEFAULT_GRID_2D).map(|r| r.value).unwrap_or(f64::NAN);
        let err = (got - expected).abs();
        worst = if err.is_nan() { f64::INFINITY } else { worst.max(err) };
        rows.push(format!("n={n}: {got:.7}"));
    }
    outcome(5, "c_R of regular 4n-gons", worst <= 1e-6, format!("{}; max error {worst:.3e} (tol 1e-6)", rows.join(", ")))
}

/// 6. `c_E` is 0 for Euclidean, 3/2 for the hexagon, within `[0, 3/2]`.
pub fn c_e_extremes() -> Outcome {
    let mut values = Vec::new();
    for spec in reference_norms() {
        values.push((spec.label(), c_e(&spec, DEFAULT_GRID).map(|r| r.value).unwrap_or(f64::NAN)));
    }
    let eu = values[0].1;
    let hex = values[5].1;
    let in_range = values.iter().all(|v| (-1e-9..=1.5 + 1e-9).contains(&v.1));
    let passed = eu <= 1e-8 && (hex - 1.5).abs() <= 1e-6 && in_range;
    let list: Vec<String> = values.iter().map(|(l, v)| format!("{l}={v:.9}")).collect();
    outcome(6, "c_E extremes", passed, list.join(", "))
}

/// 7. `1/2 <= s(z,x)² + s(z,y)² <= 2` with both bounds attained on the
/// hexagon.
pub fn conjugate_range_bounds() -> Outcome {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut evaluated = 0usize;
    for (k, spec) in reference_norms().iter().enumerate() {
        let pairs = match conjugate_pairs(spec, 256) {
            Ok(p) => p,
            Err(_) => return outcome(7, "conjugate range bounds", false, format!("no conjugate pairs for {}", spec.label())),
        };
        let ranges: Vec<(f64, f64)> = pairs
            .par_iter()
            .enumerate()
            .map(|(i, pair)| {
                let mut r = rng(7000 + 1000 * k as u64 + i as u64);
                (0..2000)
                    .map(|_| conjugate_range(spec, pair, spec.unit_point(angle(&mut r))).unwrap_or(f64::NAN))
                    .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)))
            })
            .collect();
        for (a, b) in ranges {
            lo = lo.min(a);
            hi = hi.max(b);
        }
        evaluated += 2000 * pairs.len();
    }
    let h = hexagon();
    let pair = ConjugatePair::verified(&h, Vec2::new(1.0, 0.0), Vec2::new(-0.5, S3), 1e-9);
    let (top, bottom) = match pair {
        Ok(p) => (
            conjugate_range(&h, &p, p.x + p.y).unwrap_or(f64::NAN),
            conjugate_range(&h, &p, (p.y - p.x) * 0.5).unwrap_or(f64::NAN),
        ),
        Err(_) => (f64::NAN, f64::NAN),
    };
    let passed = lo >= 0.5 - 1e-9 && hi <= 2.0 + 1e-9 && (top - 2.0).abs() <= 1e-7 && (bottom - 0.5).abs() <= 1e-7;
    outcome(7, "conjugate range bounds", passed, format!(
        "sampled range [{lo:.9}, {hi:.9}] over {evaluated} evaluations; hexagon at x+y {top:.12}, at (y-x)/2 {bottom:.12}"
    ))
}

/// 8. Law of Sines on Radon planes, diameter triangles, weak identities.
pub fn law_of_sines_check() -> Outcome {
    let h = hexagon();
    let mut r = rng(8);
    let mut hex_spread: f64 = 0.0;
    for _ in 0..200 {
        let t = random_triangle(&mut r, |r| h.unit_point(angle(r)));
        hex_spread = hex_spread.max(law_of_sines(&h, &t).map(|l| l.max_spread).unwrap_or(f64::INFINITY));
    }
    let e = NormSpec::euclidean();
    let mut eu_err: f64 = 0.0;
    for _ in 0..200 {
        let x = Vec2::from_angle(angle(&mut r));
        let mut y = Vec2::from_angle(angle(&mut r));
        while x.euclid_sin(y).abs() < 1e-3 {
            y = Vec2::from_angle(angle(&mut r));
        }
        let ratio = Triangle::new(x, y, -x).and_then(|t| law_of_sines(&e, &t)).map(|l| l.r3).unwrap_or(f64::NAN);
        eu_err = eu_err.max((ratio - 2.0).abs());
    }
    let diag = find_orthogonal_diagonals(&h)
        .and_then(|(x, y)| law_of_sines(&h, &Triangle::new(x, y, -x)?))
        .map(|l| l.r3)
        .unwrap_or(f64::NAN);
    let m = NormSpec::max_norm();
    let mut weak: f64 = 0.0;
    for _ in 0..200 {
        let t = random_triangle(&mut r, |r| Vec2::new(r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0)));
        weak = weak.max(law_of_sines(&m, &t).map(|l| l.weak_gap).unwrap_or(f64::INFINITY));
    }
    let passed = hex_spread <= 1e-8 && eu_err <= 1e-9 && (diag - 2.0).abs() <= 1e-7 && weak <= 1e-9;
    outcome(8, "law of sines", passed, format!(
        "hexagon spread {hex_spread:.3e} (tol 1e-8); euclidean diameter error {eu_err:.3e} (tol 1e-9); hexagon diagonal ratio {diag:.12} (tol 1e-7); max-norm weak gap {weak:.3e} (tol 1e-9)"
    ))
}

/// 9. Busemann and Glogovskii bisectors coincide exactly on Radon planes.
pub fn bisector_coincidence() -> Outcome {
    let h = hexagon();
    let mut r = rng(9);
    let mut hex_max: f64 = 0.0;
    let mut done = 0;
    while done < 500 {
        let (x, y) = (Vec2::from_angle(angle(&mut r)), Vec2::from_angle(angle(&mut r)));
        if x.euclid_sin(y).abs() < 1e-6 {
            continue;
        }
        let d = match (busemann_bisector(&h, x, y), glogovskii_bisector(&h, x, y)) {
            (Ok(b), Ok(g)) => (b - g).euclid(),
            _ => f64::INFINITY,
        };
        hex_max = hex_max.max(d);
        done += 1;
    }
    let m = NormSpec::max_norm();
    let (x, y) = (Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0));
    let b = busemann_bisector(&m, x, y).unwrap_or(Vec2::ZERO);
    let g = glogovskii_bisector(&m, x, y).unwrap_or(Vec2::ZERO);
    let s = |u: Vec2, v: Vec2| sine(&m, u, v).map(|s| s.value).unwrap_or(f64::NAN);
    let b_ok = b.euclid_sin(Vec2::new(2.0, 1.0)).abs() <= 1e-12 && (s(x, b) - s(y, b)).abs() <= 1e-9;
    let g_ok = g.euclid_sin(Vec2::new(3.0, 1.0)).abs() <= 1e-12 && (s(g, x) - s(g, y)).abs() <= 1e-9;
    let distinct = b.euclid_sin(g).abs() > 1e-3;
    let passed = hex_max <= 1e-8 && b_ok && g_ok && distinct;
    outcome(9, "bisector coincidence", passed, format!(
        "hexagon max difference {hex_max:.3e} (tol 1e-8); max norm busemann ({:.6},{:.6}) glogovskii ({:.6},{:.6})",
        b.x, b.y, g.x, g.y
    ))
}

/// Directions `(x, y)` with the Euclidean reflection fixing `x` a symmetry
/// of the reference norm, so that `x ⊣_R y`.
fn roberts_axes(spec: &NormSpec) -> Vec<f64> {
    match spec.polygon_ref() {
        Some(p) => {
            let k = p.half_len();
            (0..2 * k).map(|j| PI * j as f64 / (2 * k) as f64).collect()
        }
        None => vec![0.0, PI / 4.0, PI / 2.0, 3.0 * PI / 4.0],
    }
}

/// 10. The three equivalence suites agree on every input.
pub fn equivalence_suites() -> Outcome {
    let mut details = Vec::new();
    let mut passed = true;
    for (k, spec) in reference_norms().iter().enumerate() {
        let mut r = rng(1000 + k as u64);
        let mut tri_bad = 0;
        for i in 0..1000 {
            let t = if i % 2 == 0 {
                random_triangle(&mut r, |r| Vec2::new(r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0)))
            } else {
                // equal legs from a
                let a = Vec2::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0));
                let len = r.gen_range(0.2..2.0);
                random_triangle(&mut r, |r| a + spec.unit_point(angle(r)) * len)
            };
            match equal_sines_equal_sides(spec, &Triangle::new(t.a, t.b, t.c).unwrap_or(t)) {
                Ok((s, l)) if s == l => {}
                _ => tri_bad += 1,
            }
        }
        let mut iso_bad = 0;
        for i in 0..1000 {
            let x = spec.unit_point(angle(&mut r));
            let y = if i % 2 == 0 {
                spec.unit_point(angle(&mut r))
            } else {
                let ys = isosceles_partners(spec, x, 128);
                ys[r.gen_range(0..ys.len().max(1)).min(ys.len().saturating_sub(1))]
            };
            if x.euclid_sin(y).abs() < 1e-9 {
                continue;
            }
            match isosceles_sine_characterization(spec, x, y) {
                Ok((a, b, c)) if a == b && b == c => {}
                _ => iso_bad += 1,
            }
        }
        let axes = roberts_axes(spec);
        let refl: Vec<(Vec2, Vec2)> = (0..500)
            .map(|i| {
                if i % 2 == 0 {
                    let t = axes[(i / 2) % axes.len()];
                    let s = r.gen_range(0.5..2.0);
                    (Vec2::from_angle(t) * s, Vec2::from_angle(t + PI / 2.0))
                } else {
                    loop {
                        let (x, y) = (Vec2::from_angle(angle(&mut r)), Vec2::from_angle(angle(&mut r)));
                        if x.euclid_sin(y).abs() > 1e-3 {
                            break (x, y);
                        }
                    }
                }
            })
            .collect();
        let results: Vec<Option<(bool, bool)>> = refl
            .par_iter()
            .map(|&(x, y)| reflection_roberts_check(spec, x, y).ok())
            .collect();
        let refl_bad = results.iter().filter(|o| !matches!(o, Some((a, b)) if a == b)).count();
        let roberts_hits = results.iter().filter(|o| matches!(o, Some((true, true)))).count();
        if tri_bad + iso_bad + refl_bad > 0 {
            passed = false;
        }
        details.push(format!("{}: {tri_bad}/{iso_bad}/{refl_bad} ({roberts_hits} Roberts)", spec.label()));
    }
    outcome(10, "equivalence suites", passed, format!("disagreements tri/iso/reflection: {}", details.join(", ")))
}

/// 11. `(x + α y) ⊣_B (x - α y)` and `α(v,w) α(w,-v) = 1` on Radon planes.
pub fn benitez_alpha_check() -> Outcome {
    let mut worst_defect: f64 = 0.0;
    let mut worst_product: f64 = 0.0;
    for (k, spec) in reference_norms().iter().enumerate() {
        let radon = spec.is_radon(1024, 1e-9).map(|r| r.is_radon).unwrap_or(false);
        let mut r = rng(1100 + k as u64);
        let pairs: Vec<(Vec2, Vec2)> = (0..1000)
            .map(|_| loop {
                let x = Vec2::from_angle(angle(&mut r)) * r.gen_range(0.2..3.0);
                let y = Vec2::from_angle(angle(&mut r)) * r.gen_range(0.2..3.0);
                if x.euclid_sin(y).abs() > 1e-3 {
                    break (x, y);
                }
            })
            .collect();
        let res: Vec<(f64, f64)> = pairs
            .par_iter()
            .map(|&(x, y)| {
                let Ok(a) = benitez_alpha(spec, x, y) else {
                    return (f64::INFINITY, f64::INFINITY);
                };
                let (u, v) = (x + y * a, x - y * a);
                let defect = birkhoff_defect(spec, u, v)
                    .map(|d| (spec.gauge(u) - d.min_value).max(0.0))
                    .unwrap_or(f64::INFINITY);
                let product = if radon {
                    let (xh, yh) = (x / spec.gauge(x), y / spec.gauge(y));
                    match (benitez_alpha(spec, xh, yh), benitez_alpha(spec, yh, -xh)) {
                        (Ok(p), Ok(q)) => (p * q - 1.0).abs(),
                        _ => f64::INFINITY,
                    }
                } else {
                    0.0
                };
                (defect, product)
            })
            .collect();
        for (d, p) in res {
            worst_defect = worst_defect.max(d);
            worst_product = worst_product.max(p);
        }
    }
    let passed = worst_defect <= 1e-8 && worst_product <= 1e-7;
    outcome(11, "benitez alpha", passed, format!(
        "max Birkhoff defect {worst_defect:.3e} (tol 1e-8); max |α(v,w)α(w,-v) - 1| on Radon norms {worst_product:.3e} (tol 1e-7)"
    ))
}

/// Brute-force `D(X)`: `n` directions `x` against `n` directions `y` on the
/// half-turn after `x`; grid points with `|‖x+y‖ - ‖x-y‖| <= 1e-6` and
/// bisected sign changes (to the same residual) are evaluated with the
/// direct sine.
pub fn d_grid_oracle(spec: &NormSpec, n: usize) -> f64 {
    const FILTER: f64 = 1e-6;
    (0..n)
        .into_par_iter()
        .map(|i| {
            let theta = PI * i as f64 / n as f64;
            let x = spec.unit_point(theta);
            let h = |phi: f64| {
                let y = spec.unit_point(phi);
                spec.gauge(x + y) - spec.gauge(x - y)
            };
            let s = |phi: f64| sine_direct(spec, x, spec.unit_point(phi)).map(|s| s.value).unwrap_or(f64::INFINITY);
            let phis: Vec<f64> = (0..=n).map(|j| theta + PI * j as f64 / n as f64).collect();
            let vals: Vec<f64> = phis.iter().map(|&p| h(p)).collect();
            let mut best = f64::INFINITY;
            for j in 1..n {
                if vals[j].abs() <= FILTER {
                    best = best.min(s(phis[j]));
                }
            }
            for j in 0..n {
                if vals[j].abs() > FILTER && vals[j + 1].abs() > FILTER && (vals[j] > 0.0) != (vals[j + 1] > 0.0) {
                    let root = bisect(h, phis[j], phis[j + 1], 1e-13);
                    if h(root).abs() <= FILTER {
                        best = best.min(s(root));
                    }
                }
            }
            best
        })
        .collect::<Vec<f64>>()
        .into_iter()
        .fold(f64::INFINITY, f64::min)
}

/// 12. `D(X)` against the brute-force grid oracle.
pub fn d_constant_check() -> Outcome {
    let mut passed = true;
    let mut rows = Vec::new();
    for spec in [NormSpec::euclidean(), NormSpec::max_norm(), hexagon()] {
        let d = d_constant(&spec, DEFAULT_GRID).map(|r| r.value).unwrap_or(f64::NAN);
        let oracle = d_grid_oracle(&spec, 2048);
        let ok = (d - oracle).abs() <= 2e-3;
        passed &= ok;
        rows.push(format!("{}: D={d:.9} oracle={oracle:.9}", spec.label()));
        if matches!(spec.kind(), crate::norm::NormKind::Euclidean) {
            passed &= (d - 1.0).abs() <= 1e-9;
        }
    }
    outcome(12, "D(X) against grid oracle", passed, format!("{} (tol 2e-3; euclidean exactly 1 within 1e-9)", rows.join(", ")))
}

/// Every criterion as `(id, name, check)`.
pub fn criteria() -> Vec<(u8, &'static str, fn() -> Outcome)> {
    vec![
        (1, "euclidean consistency", euclidean_consistency as fn() -> Outcome),
        (2, "oracle equivalence", oracle_equivalence),
        (3, "range and degeneracy", range_degeneracy),
        (4, "radon symmetry dichotomy", radon_symmetry),
        (5, "c_R of regular 4n-gons", rectilinear_table),
        (6, "c_E extremes", c_e_extremes),
        (7, "conjugate range bounds", conjugate_range_bounds),
        (8, "law of sines", law_of_sines_check),
        (9, "bisector coincidence", bisector_coincidence),
        (10, "equivalence suites", equivalence_suites),
        (11, "benitez alpha", benitez_alpha_check),
        (12, "D(X) against grid oracle", d_constant_check),
    ]
}

/// Runs all criteria in order.
pub fn run_all() -> Vec<Outcome> {
    criteria().into_iter().map(|(_, _, f)| f()).collect()
}
