//! Subcommand dispatch: every command turns a [`RunConfig`] into CSV (or SVG
//! for circles) text.

use std::fmt::Write as _;
use std::io::Write as _;

use crate::config::{Command, RunConfig};
use crate::constants::{c_e, c_r, d_constant, ConstantReport, DEFAULT_GRID, DEFAULT_GRID_2D};
use crate::error::{Error, Result};
use crate::norm::{Circle, DEFAULT_TOL};
use crate::orthogonality::{
    benitez_alpha, birkhoff_defect, conjugate_pairs, is_birkhoff, is_isosceles, roberts_report,
};
use crate::reproduce;
use crate::sine::{sine, sine_direct};
use crate::trig::{
    busemann_bisector, glogovskii_bisector, is_sine_conformal, law_of_sines,
    reflection_roberts_check, LinearMap2, Triangle,
};
use crate::vec2::Vec2;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for invalid input or a failed precondition.
pub const EXIT_INPUT: i32 = 1;
/// Exit status when a reproduction criterion fails.
pub const EXIT_REPRODUCTION: i32 = 2;

/// Text produced by a command and the exit status it asks for.
#[derive(Debug, Clone, PartialEq)]
pub struct CliOutput {
    pub text: String,
    pub status: i32,
}

/// Formats with 12 significant digits, trailing zeros trimmed.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let rounded: f64 = format!("{v:.11e}").parse().unwrap_or(v);
    let mag = rounded.abs().log10().floor() as i32;
    if (-5..=15).contains(&mag) {
        rounded.to_string()
    } else {
        let s = format!("{rounded:.11e}");
        let (mant, exp) = s.split_once('e').unwrap_or((&s, "0"));
        let mant = mant.trim_end_matches('0').trim_end_matches('.');
        format!("{mant}e{exp}")
    }
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

fn need(config: &RunConfig, key: &str) -> Result<Vec2> {
    config.vector(key).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "{} needs the vector parameter '{key}' (e.g. {key}=1,0)",
            config.command.map_or("command", |c| c.as_str())
        ))
    })
}

fn usize_param(config: &RunConfig, key: &str, default: usize) -> usize {
    config.int(key).map_or(default, |n| n as usize)
}

fn report_row(r: &ConstantReport) -> Vec<String> {
    let mut row = vec![r.name.as_str().to_string(), fmt_num(r.value)];
    for k in 0..2 {
        let w = r.witness.get(k).copied().unwrap_or(Vec2::ZERO);
        row.push(fmt_num(w.x));
        row.push(fmt_num(w.y));
    }
    row.push(r.grid.to_string());
    row.push(r.refined.to_string());
    row
}

/// Closed SVG polyline in the viewBox `[-2, 2]²`, `y` pointing up.
pub fn svg_polyline(points: &[Vec2]) -> String {
    let mut pts = String::new();
    for p in points.iter().chain(points.first()) {
        let _ = write!(pts, "{},{} ", fmt_num(p.x), fmt_num(-p.y));
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-2 -2 4 4\" width=\"400\" height=\"400\">\n\
         <polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.01\" points=\"{}\"/>\n</svg>\n",
        pts.trim_end()
    )
}

/// Runs the configured command. Errors mean invalid input (exit status 1).
pub fn run(config: &RunConfig) -> Result<CliOutput> {
    let command = config
        .command
        .ok_or_else(|| Error::InvalidArgument("no command given".into()))?;
    let spec = &config.norm;
    let tol = config.real("tol").unwrap_or(DEFAULT_TOL);
    let ok = |text: String| Ok(CliOutput { text, status: EXIT_OK });
    match command {
        Command::Sine => {
            let (x, y) = (need(config, "x")?, need(config, "y")?);
            let s = match config.text("method") {
                Some("direct") => sine_direct(spec, x, y)?,
                _ => sine(spec, x, y)?,
            };
            ok(csv(
                &["value", "t_star", "method"],
                &[vec![fmt_num(s.value), fmt_num(s.t_star), s.method.as_str().into()]],
            ))
        }
        Command::Antinorm => {
            let a = spec.antinorm(need(config, "x")?)?;
            ok(csv(
                &["value", "witness_x", "witness_y"],
                &[vec![fmt_num(a.value), fmt_num(a.witness.x), fmt_num(a.witness.y)]],
            ))
        }
        Command::Birkhoff => {
            let (x, y) = (need(config, "x")?, need(config, "y")?);
            let d = birkhoff_defect(spec, x, y)?;
            ok(csv(
                &["orthogonal", "t_star", "min_value"],
                &[vec![
                    is_birkhoff(spec, x, y, tol)?.to_string(),
                    fmt_num(d.t_star),
                    fmt_num(d.min_value),
                ]],
            ))
        }
        Command::Isosceles => {
            let (x, y) = (need(config, "x")?, need(config, "y")?);
            let gap = (spec.gauge(x + y) - spec.gauge(x - y)).abs();
            ok(csv(
                &["orthogonal", "gap"],
                &[vec![is_isosceles(spec, x, y, tol)?.to_string(), fmt_num(gap)]],
            ))
        }
        Command::Roberts => {
            let (x, y) = (need(config, "x")?, need(config, "y")?);
            let r = roberts_report(spec, x, y, tol)?;
            ok(csv(
                &["orthogonal", "max_gap", "checked"],
                &[vec![r.holds.to_string(), fmt_num(r.max_gap), r.checked.to_string()]],
            ))
        }
        Command::Conjugates => {
            let pairs = conjugate_pairs(spec, usize_param(config, "n", 256))?;
            let rows: Vec<Vec<String>> = pairs
                .iter()
                .map(|p| {
                    vec![
                        fmt_num(p.x.x),
                        fmt_num(p.x.y),
                        fmt_num(p.y.x),
                        fmt_num(p.y.y),
                        p.degenerate.to_string(),
                    ]
                })
                .collect();
            ok(csv(&["x_x", "x_y", "y_x", "y_y", "degenerate"], &rows))
        }
        Command::Alpha => {
            let a = benitez_alpha(spec, need(config, "x")?, need(config, "y")?)?;
            ok(csv(&["alpha"], &[vec![fmt_num(a)]]))
        }
        Command::Radon => {
            let r = spec.is_radon(usize_param(config, "samples", 1024), tol)?;
            ok(csv(
                &["check", "is_radon", "lambda", "spread"],
                &[vec!["radon".into(), r.is_radon.to_string(), fmt_num(r.lambda), fmt_num(r.spread)]],
            ))
        }
        Command::Constants => {
            let grid = usize_param(config, "grid", DEFAULT_GRID);
            let grid_2d = usize_param(config, "grid", DEFAULT_GRID_2D);
            let rows = vec![
                report_row(&c_e(spec, grid)?),
                report_row(&c_r(spec, grid_2d)?),
                report_row(&d_constant(spec, grid)?),
            ];
            ok(csv(
                &["name", "value", "w1_x", "w1_y", "w2_x", "w2_y", "grid", "refined"],
                &rows,
            ))
        }
        Command::Bisect => {
            let (x, y) = (need(config, "x")?, need(config, "y")?);
            let b = busemann_bisector(spec, x, y)?;
            let g = glogovskii_bisector(spec, x, y)?;
            ok(csv(
                &["bisector", "x", "y"],
                &[
                    vec!["busemann".into(), fmt_num(b.x), fmt_num(b.y)],
                    vec!["glogovskii".into(), fmt_num(g.x), fmt_num(g.y)],
                ],
            ))
        }
        Command::LawSines => {
            let t = Triangle::new(need(config, "a")?, need(config, "b")?, need(config, "c")?)?;
            let r = law_of_sines(spec, &t)?;
            ok(csv(
                &["r1", "r2", "r3", "max_spread", "weak_gap"],
                &[vec![
                    fmt_num(r.r1),
                    fmt_num(r.r2),
                    fmt_num(r.r3),
                    fmt_num(r.max_spread),
                    fmt_num(r.weak_gap),
                ]],
            ))
        }
        Command::Conformal => {
            if let Some(m) = config.map("map") {
                let f = LinearMap2::new(m);
                let seed = config.int("seed").unwrap_or(0);
                let c = is_sine_conformal(spec, &f, usize_param(config, "samples", 1000), tol, seed)?;
                ok(csv(&["conformal"], &[vec![c.to_string()]]))
            } else {
                let (x, y) = (need(config, "x")?, need(config, "y")?);
                let (c, r) = reflection_roberts_check(spec, x, y)?;
                ok(csv(&["conformal", "roberts"], &[vec![c.to_string(), r.to_string()]]))
            }
        }
        Command::EmitCircle => {
            let which = match config.text("which") {
                Some("anticircle") => Circle::Anticircle,
                _ => Circle::Unit,
            };
            let pts = spec.emit_circle(which, usize_param(config, "n", 360))?;
            if config.flag("svg") {
                ok(svg_polyline(&pts))
            } else {
                let rows: Vec<Vec<String>> =
                    pts.iter().map(|p| vec![fmt_num(p.x), fmt_num(p.y)]).collect();
                ok(csv(&["x", "y"], &rows))
            }
        }
        Command::Reproduce => {
            let mut text = String::new();
            let mut status = EXIT_OK;
            for (_, _, check) in reproduce::criteria() {
                let o = check();
                if !o.passed {
                    status = EXIT_REPRODUCTION;
                }
                let _ = writeln!(text, "{o}");
            }
            Ok(CliOutput { text, status })
        }
    }
}

/// Runs `config`, writes the result to its output (or standard output) and
/// returns the process exit status. Errors go to standard error.
pub fn execute(config: &RunConfig) -> i32 {
    match run(config) {
        Ok(out) => {
            let written = match &config.output {
                Some(path) => std::fs::write(path, &out.text),
                None => std::io::stdout().write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {}", Error::Io(e.to_string()));
                return EXIT_INPUT;
            }
            out.status
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;

    fn run_text(text: &str) -> String {
        run(&parse_config(text).unwrap()).unwrap().text
    }

    #[test]
    fn number_format() {
        assert_eq!(fmt_num(0.5), "0.5");
        assert_eq!(fmt_num(-0.0), "0");
        assert_eq!(fmt_num(2.0), "2");
        assert_eq!(fmt_num(3f64.sqrt() / 2.0), "0.866025403784");
        assert_eq!(fmt_num(1.0 / 3.0 * 1e-9), "3.33333333333e-10");
        assert_eq!(fmt_num(123456.789), "123456.789");
    }

    #[test]
    fn sine_command() {
        let out = run_text("kind = lp\np = inf\n[run]\ncommand = sine\nx = 1,0\ny = 1,1");
        assert_eq!(out, "value,t_star,method\n0.5,-0.5,antinorm-formula\n");
        let out = run_text("kind = lp\np = inf\n[run]\ncommand = sine\nx = 1,0\ny = 1,1\nmethod = direct");
        assert!(out.lines().nth(1).unwrap().starts_with("0.5,"));
    }

    #[test]
    fn radon_command() {
        let out = run_text(
            "kind = polygon\nvertices = 1,0; 0.5,0.8660254037844386; -0.5,0.8660254037844386\n[run]\ncommand = radon",
        );
        assert!(out.lines().nth(1).unwrap().starts_with("radon,true,0.866025403784"), "{out}");
    }

    #[test]
    fn missing_parameter_is_input_error() {
        let c = parse_config("[run]\ncommand = sine\nx = 1,0").unwrap();
        assert!(matches!(run(&c), Err(Error::InvalidArgument(_))));
        assert_eq!(execute(&c), EXIT_INPUT);
    }

    #[test]
    fn svg_is_closed() {
        let out = run_text("[run]\ncommand = emit-circle\nn = 4\nsvg = true");
        assert!(out.contains("viewBox=\"-2 -2 4 4\""));
        assert!(out.contains("points=\"1,0 0,-1 -1,0 0,1 1,0\""), "{out}");
    }

    #[test]
    fn conformal_command() {
        let out = run_text("[run]\ncommand = conformal\nmap = 2,0,0,1");
        assert_eq!(out, "conformal\nfalse\n");
        let out = run_text("kind = lp\np = inf\n[run]\ncommand = conformal\nx = 1,0\ny = 0,1");
        assert_eq!(out, "conformal,roberts\ntrue,true\n");
    }
}
