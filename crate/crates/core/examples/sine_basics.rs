//! The sine by both methods, its asymmetry outside Radon planes, polar
//! coordinates over a conjugate basis and prescribed sine values.
//!
//! cargo run --example sine_basics

use minkowski_sine::orthogonality::conjugate_pairs;
use minkowski_sine::sine::{conjugate_range, find_pair_with_sine, polar_coords, sine, sine_direct};
use minkowski_sine::{NormSpec, Vec2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let norms = [
        NormSpec::euclidean(),
        NormSpec::lp(3.0)?,
        NormSpec::max_norm(),
        NormSpec::regular_polygon(6)?,
    ];
    let (x, y) = (Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0));

    println!("{:<12} {:>10} {:>10} {:>10}", "norm", "s(x,y)", "direct", "s(y,x)");
    for spec in &norms {
        println!(
            "{:<12} {:>10.6} {:>10.6} {:>10.6}",
            spec.label(),
            sine(spec, x, y)?.value,
            sine_direct(spec, x, y)?.value,
            sine(spec, y, x)?.value,
        );
    }

    let hex = &norms[3];
    let pair = conjugate_pairs(hex, 256)?[0];
    println!("\nhexagon conjugate pair x={} y={}", pair.x, pair.y);
    for z in [Vec2::new(0.3, 0.9), pair.x + pair.y, (pair.y - pair.x) * 0.5] {
        let pc = polar_coords(hex, &pair, z)?;
        println!(
            "z=({:+.4},{:+.4})  alpha={:+.6} beta={:+.6}  s(z,x)²+s(z,y)²={:.6}",
            z.x,
            z.y,
            pc.alpha,
            pc.beta,
            conjugate_range(hex, &pair, z)?
        );
    }

    let square = &norms[2];
    for eps in [0.0, 0.25, 0.5, 1.0] {
        let (z, w) = find_pair_with_sine(square, eps)?;
        println!("max norm: s(({:.3},{:.3}), ({:.3},{:.3})) = {:.6}", z.x, z.y, w.x, w.y, sine(square, z, w)?.value);
    }
    Ok(())
}
