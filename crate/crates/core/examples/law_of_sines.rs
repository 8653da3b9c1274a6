//! Law of Sines ratios, bisectors and the parallelogram area identity.
//!
//! cargo run --example law_of_sines

use minkowski_sine::orthogonality::find_orthogonal_diagonals;
use minkowski_sine::trig::{
    busemann_bisector, glogovskii_bisector, law_of_sines, parallelogram_area_check, Triangle,
};
use minkowski_sine::{NormSpec, Vec2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let hex = NormSpec::regular_polygon(6)?;
    let square = NormSpec::max_norm();

    let tri = Triangle::new(hex.unit_point(0.2), hex.unit_point(1.9), hex.unit_point(4.0))?;
    for spec in [&hex, &square] {
        let r = law_of_sines(spec, &tri)?;
        println!(
            "{:<12} ratios {:.9} {:.9} {:.9}  spread {:.2e}  weak gap {:.2e}",
            spec.label(),
            r.r1,
            r.r2,
            r.r3,
            r.max_spread,
            r.weak_gap
        );
    }

    let (x, y) = find_orthogonal_diagonals(&hex)?;
    let r = law_of_sines(&hex, &Triangle::new(x, y, -x)?)?;
    println!("hexagon triangle x, y, -x on orthogonal diagonals: ratio {:.12}", r.r3);

    let (u, v) = (Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0));
    for spec in [&hex, &square] {
        let b = busemann_bisector(spec, u, v)?;
        let g = glogovskii_bisector(spec, u, v)?;
        println!("{:<12} busemann ({:.6},{:.6})  glogovskii ({:.6},{:.6})", spec.label(), b.x, b.y, g.x, g.y);
    }

    for (b, d) in [(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)), (Vec2::new(1.0, 1.0), Vec2::new(-1.0, 1.0))] {
        for spec in [&hex, &square] {
            let p = parallelogram_area_check(spec, Vec2::ZERO, b, d)?;
            println!("{:<12} area {:.6} product {:.6} ratio {:.6}", spec.label(), p.area, p.product, p.ratio);
        }
    }
    Ok(())
}
