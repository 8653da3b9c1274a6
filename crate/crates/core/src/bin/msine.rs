use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use minkowski_sine::cli::{execute, EXIT_INPUT};
use minkowski_sine::config::ConfigBuilder;

/// Generalized sine, orthogonality and trigonometric constants in normed
/// planes.
///
/// Parameters are `key=value` pairs using the config-file keys, for example
/// `msine sine kind=lp p=inf x=1,0 y=1,1`.
#[derive(Parser, Debug)]
#[command(name = "msine", version)]
struct Args {
    /// sine, antinorm, birkhoff, isosceles, roberts, conjugates, alpha, radon,
    /// constants, bisect, lawsines, conformal, emit-circle or reproduce
    command: String,

    /// key=value assignments (norm keys: kind, p, vertices)
    params: Vec<String>,

    /// Config file read before the command-line assignments
    #[arg(long)]
    config: Option<PathBuf>,

    /// Write the result here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,

    /// SVG instead of CSV for emit-circle
    #[arg(long)]
    svg: bool,

    /// Seed of sampled predicates
    #[arg(long)]
    seed: Option<u64>,
}

fn build(args: &Args) -> Result<minkowski_sine::config::RunConfig, String> {
    let mut b = ConfigBuilder::new();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        b.read(&text)
            .map_err(|e| format!("{}: {e}", path.display()))?;
    }
    b.set("command", &args.command, 0)?;
    for p in &args.params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got '{p}'"))?;
        b.set(k, v, 0).map_err(|e| format!("argument '{p}': {e}"))?;
    }
    if let Some(o) = &args.output {
        b.set("output", &o.to_string_lossy(), 0)?;
    }
    if args.svg {
        b.set("svg", "true", 0)?;
    }
    if let Some(s) = args.seed {
        b.set("seed", &s.to_string(), 0)?;
    }
    b.finish().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match build(&args) {
        Ok(config) => ExitCode::from(execute(&config) as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
