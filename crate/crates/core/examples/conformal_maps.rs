//! Sine-conformal linear maps and reflections at Roberts pairs.
//!
//! cargo run --example conformal_maps

use std::f64::consts::PI;

use minkowski_sine::trig::{is_sine_conformal, reflection_roberts_check, LinearMap2};
use minkowski_sine::{NormSpec, Vec2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let hex = NormSpec::regular_polygon(6)?;
    let maps = [
        ("identity", LinearMap2::IDENTITY),
        ("scale 3", LinearMap2::diag(3.0, 3.0)),
        ("rotate π/3", LinearMap2::rotation(PI / 3.0)),
        ("rotate 0.3", LinearMap2::rotation(0.3)),
        ("diag(2,1)", LinearMap2::diag(2.0, 1.0)),
    ];
    for (name, f) in maps {
        println!("hexagon, {name:<10}: conformal = {}", is_sine_conformal(&hex, &f, 1000, 1e-9, 0)?);
    }

    let square = NormSpec::max_norm();
    for (x, y) in [
        (Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)),
        (Vec2::new(1.0, 1.0), Vec2::new(-1.0, 1.0)),
        (Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0)),
    ] {
        let (c, r) = reflection_roberts_check(&square, x, y)?;
        println!("max norm reflection fixing {x}, negating {y}: conformal={c} roberts={r}");
    }
    Ok(())
}
