//! Antinorms, Radon detection and orthogonal diagonals.
//!
//! cargo run --example radon_planes

use minkowski_sine::orthogonality::{find_orthogonal_diagonals, is_birkhoff};
use minkowski_sine::{NormSpec, Vec2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let norms = [
        NormSpec::euclidean(),
        NormSpec::lp(1.5)?,
        NormSpec::max_norm(),
        NormSpec::regular_polygon(6)?,
        NormSpec::regular_polygon(8)?,
        NormSpec::regular_polygon(10)?,
    ];
    for spec in &norms {
        let r = spec.is_radon(1024, 1e-9)?;
        let a = spec.antinorm(Vec2::new(1.0, 1.0))?;
        print!(
            "{:<12} radon={:<5} λ={:.6} spread={:.2e} ‖(1,1)‖_a={:.6}",
            spec.label(),
            r.is_radon,
            r.lambda,
            r.spread,
            a.value
        );
        if r.is_radon {
            let (x, y) = find_orthogonal_diagonals(spec)?;
            print!(
                "  diagonals x=({:.4},{:.4}) y=({:.4},{:.4}) check={}",
                x.x,
                x.y,
                y.x,
                y.y,
                is_birkhoff(spec, x + y, x - y, 1e-8)?
            );
        }
        println!();
    }
    Ok(())
}
