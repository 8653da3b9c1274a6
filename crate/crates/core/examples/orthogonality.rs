//! Birkhoff, isosceles and Roberts orthogonality, conjugate directions and
//! the α of `(x + α y) ⊣_B (x - α y)`.
//!
//! cargo run --example orthogonality

use minkowski_sine::orthogonality::{
    benitez_alpha, birkhoff_defect, conjugate_families, is_birkhoff, is_isosceles, is_roberts,
    ConjugateFamily,
};
use minkowski_sine::{NormSpec, Vec2, DEFAULT_TOL};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let square = NormSpec::max_norm();
    let probes = [
        (Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)),
        (Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0)),
        (Vec2::new(1.0, 0.5), Vec2::new(0.0, 1.0)),
    ];
    println!("max norm");
    for (x, y) in probes {
        let d = birkhoff_defect(&square, x, y)?;
        println!(
            "  x={x} y={y}: birkhoff={} isosceles={} roberts={} (min ‖x+ty‖={:.4} at t={:.4})",
            is_birkhoff(&square, x, y, DEFAULT_TOL)?,
            is_isosceles(&square, x, y, DEFAULT_TOL)?,
            is_roberts(&square, x, y, DEFAULT_TOL)?,
            d.min_value,
            d.t_star,
        );
    }

    for spec in [NormSpec::regular_polygon(6)?, NormSpec::lp(3.0)?] {
        println!("\nconjugate directions of {}", spec.label());
        for fam in conjugate_families(&spec, 256)? {
            match fam {
                ConjugateFamily::Isolated(p) => {
                    println!("  ({:+.4},{:+.4}) <-> ({:+.4},{:+.4}) degenerate={}", p.x.x, p.x.y, p.y.x, p.y.y, p.degenerate)
                }
                ConjugateFamily::Segment { fixed, from, to } => println!(
                    "  ({:+.4},{:+.4}) <-> segment ({:+.4},{:+.4})..({:+.4},{:+.4})",
                    fixed.x, fixed.y, from.x, from.y, to.x, to.y
                ),
            }
        }
    }

    let lp = NormSpec::lp(1.5)?;
    let (x, y) = (Vec2::new(1.0, 0.2), Vec2::new(-0.3, 1.0));
    let a = benitez_alpha(&lp, x, y)?;
    println!("\nlp(1.5): α(x,y) = {a:.10}, (x+αy) ⊣_B (x-αy): {}", is_birkhoff(&lp, x + y * a, x - y * a, 1e-10)?);
    Ok(())
}
