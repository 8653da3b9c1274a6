//! Writes the unit circle and anticircle of a few norms as CSV and SVG into
//! the system temporary directory.
//!
//! cargo run --example emit_circles

use minkowski_sine::cli::{fmt_num, svg_polyline};
use minkowski_sine::{Circle, NormSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("msine-circles");
    std::fs::create_dir_all(&dir)?;
    let norms = [("lp3", NormSpec::lp(3.0)?), ("hexagon", NormSpec::regular_polygon(6)?), ("max", NormSpec::max_norm())];
    for (name, spec) in &norms {
        for (which, tag) in [(Circle::Unit, "unit"), (Circle::Anticircle, "anti")] {
            let pts = spec.emit_circle(which, 360)?;
            let mut csv = String::from("x,y\n");
            for p in &pts {
                csv.push_str(&format!("{},{}\n", fmt_num(p.x), fmt_num(p.y)));
            }
            let base = dir.join(format!("{name}_{tag}"));
            std::fs::write(base.with_extension("csv"), csv)?;
            std::fs::write(base.with_extension("svg"), svg_polyline(&pts))?;
        }
    }
    println!("wrote {} files to {}", norms.len() * 4, dir.display());
    Ok(())
}
