//! One- and two-dimensional derivative-free search routines.
//!
//! Every objective in this crate is either convex along a line (gauge
//! restricted to a line), monotone between bracketing samples, or piecewise
//! smooth with kinks at polygon vertex events, so plain golden-section,
//! bisection and compass search are all that is needed.

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Minimizes a unimodal `f` on `[a, b]`; returns `(argmin, min)`.
///
/// Stops when the bracket is narrower than `tol` or after 200 iterations.
pub fn golden_section_min<F>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..200 {
        if (b - a) <= tol {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    // The endpoints are never evaluated by the loop; include them so a
    // minimum sitting exactly on the boundary is not missed.
    let mut best = if fc <= fd { (c, fc) } else { (d, fd) };
    for t in [a, b] {
        let ft = f(t);
        if ft < best.1 {
            best = (t, ft);
        }
    }
    best
}

/// Maximizes a unimodal `f` on `[a, b]`; returns `(argmax, max)`.
pub fn golden_section_max<F>(mut f: F, a: f64, b: f64, tol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let (t, v) = golden_section_min(|t| -f(t), a, b, tol);
    (t, -v)
}

/// Finds a root of `f` in `[a, b]` given `f(a)` and `f(b)` of opposite sign
/// (or one of them zero). Returns the endpoint of the final bracket with the
/// smaller `|f|`.
pub fn bisect<F>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> f64
where
    F: FnMut(f64) -> f64,
{
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    let mut fb_abs = fb.abs();
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        let m = 0.5 * (a + b);
        if m == a || m == b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb_abs = fm.abs();
        }
    }
    if fa.abs() <= fb_abs {
        a
    } else {
        b
    }
}

/// Result of a compass (pattern) search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternResult {
    pub point: [f64; 2],
    pub value: f64,
    pub shrinks: usize,
}

/// Maximizes `f` over the plane by compass search starting at `start`.
///
/// Polls the four axis neighbours at the current step; moves on improvement,
/// otherwise multiplies the step by `shrink`. Stops after `max_shrinks`
/// contractions.
pub fn pattern_search_max<F>(
    mut f: F,
    start: [f64; 2],
    step: f64,
    shrink: f64,
    max_shrinks: usize,
) -> PatternResult
where
    F: FnMut([f64; 2]) -> f64,
{
    let mut point = start;
    let mut value = f(point);
    let mut step = step;
    let mut shrinks = 0;
    let mut polls = 0usize;
    while shrinks < max_shrinks && polls < 20_000 {
        polls += 1;
        let mut improved = false;
        for (dx, dy) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
            let cand = [point[0] + dx * step, point[1] + dy * step];
            let v = f(cand);
            if v > value {
                point = cand;
                value = v;
                improved = true;
                break;
            }
        }
        if !improved {
            step *= shrink;
            shrinks += 1;
        }
    }
    PatternResult {
        point,
        value,
        shrinks,
    }
}
