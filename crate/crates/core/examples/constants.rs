//! The constants c_E, c_R and D(X) over a family of norms.
//!
//! cargo run --release --example constants

use minkowski_sine::constants::{c_e, c_r, d_constant, DEFAULT_GRID, DEFAULT_GRID_2D};
use minkowski_sine::NormSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut norms = vec![NormSpec::euclidean(), NormSpec::lp(1.5)?, NormSpec::lp(3.0)?, NormSpec::max_norm()];
    for n in [6, 8, 12] {
        norms.push(NormSpec::regular_polygon(n)?);
    }
    println!("{:<12} {:>10} {:>10} {:>10}", "norm", "c_E", "c_R", "D");
    for spec in &norms {
        println!(
            "{:<12} {:>10.7} {:>10.7} {:>10.7}",
            spec.label(),
            c_e(spec, DEFAULT_GRID)?.value,
            c_r(spec, DEFAULT_GRID_2D)?.value,
            d_constant(spec, DEFAULT_GRID)?.value,
        );
    }

    println!("\nc_R of regular 4n-gons against sin²(π/4n)");
    for n in 1..=6 {
        let spec = NormSpec::regular_polygon(4 * n)?;
        let expected = (std::f64::consts::PI / (4 * n) as f64).sin().powi(2);
        println!("  n={n}: {:.9} vs {expected:.9}", c_r(&spec, DEFAULT_GRID_2D)?.value);
    }
    Ok(())
}
