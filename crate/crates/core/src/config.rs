//! Line-oriented run configuration.
//!
//! ```text
//! # regular hexagon
//! [norm]
//! kind = polygon
//! vertices = 1,0; 0.5,0.8660254037844386; -0.5,0.8660254037844386
//!
//! [run]
//! command = sine
//! x = 1,0
//! y = 0,1
//! ```
//!
//! Keys are case-insensitive and `#` starts a comment. Section headers are
//! optional; a key outside any section is routed by its name.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::norm::{NormKind, NormSpec};
use crate::vec2::Vec2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Command {
    Sine,
    Antinorm,
    Birkhoff,
    Isosceles,
    Roberts,
    Conjugates,
    Alpha,
    Radon,
    Constants,
    Bisect,
    LawSines,
    Conformal,
    EmitCircle,
    Reproduce,
}

impl Command {
    pub const ALL: [Command; 14] = [
        Command::Sine,
        Command::Antinorm,
        Command::Birkhoff,
        Command::Isosceles,
        Command::Roberts,
        Command::Conjugates,
        Command::Alpha,
        Command::Radon,
        Command::Constants,
        Command::Bisect,
        Command::LawSines,
        Command::Conformal,
        Command::EmitCircle,
        Command::Reproduce,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Command::Sine => "sine",
            Command::Antinorm => "antinorm",
            Command::Birkhoff => "birkhoff",
            Command::Isosceles => "isosceles",
            Command::Roberts => "roberts",
            Command::Conjugates => "conjugates",
            Command::Alpha => "alpha",
            Command::Radon => "radon",
            Command::Constants => "constants",
            Command::Bisect => "bisect",
            Command::LawSines => "lawsines",
            Command::Conformal => "conformal",
            Command::EmitCircle => "emit-circle",
            Command::Reproduce => "reproduce",
        }
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim().to_ascii_lowercase();
        Command::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown command '{s}'"))
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A typed `[run]` parameter.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Vector(Vec2),
    Int(u64),
    Real(f64),
    Map([f64; 4]),
    Bool(bool),
    Text(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Vector(v) => write!(f, "{},{}", v.x, v.y),
            ParamValue::Int(n) => write!(f, "{n}"),
            ParamValue::Real(r) => write!(f, "{r}"),
            ParamValue::Map(m) => write!(f, "{},{},{},{}", m[0], m[1], m[2], m[3]),
            ParamValue::Bool(b) => write!(f, "{b}"),
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum ParamKind {
    Vector,
    Int,
    Real,
    Map,
    Bool,
    Choice(&'static [&'static str]),
}

fn param_kind(key: &str) -> Option<ParamKind> {
    Some(match key {
        "x" | "y" | "z" | "a" | "b" | "c" | "d" => ParamKind::Vector,
        "grid" | "n" | "samples" | "seed" => ParamKind::Int,
        "tol" | "eps" => ParamKind::Real,
        "map" => ParamKind::Map,
        "svg" => ParamKind::Bool,
        "which" => ParamKind::Choice(&["unit", "anticircle"]),
        "method" => ParamKind::Choice(&["formula", "direct"]),
        _ => return None,
    })
}

const NORM_KEYS: [&str; 3] = ["kind", "p", "vertices"];

/// A parsed configuration: the norm, an optional command (the CLI may supply
/// it instead), typed parameters and the output destination.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub norm: NormSpec,
    pub command: Option<Command>,
    pub params: BTreeMap<String, ParamValue>,
    /// `None` writes to standard output.
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn vector(&self, key: &str) -> Option<Vec2> {
        match self.params.get(key) {
            Some(ParamValue::Vector(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn int(&self, key: &str) -> Option<u64> {
        match self.params.get(key) {
            Some(ParamValue::Int(n)) => Some(*n),
            _ => None,
        }
    }

    pub fn real(&self, key: &str) -> Option<f64> {
        match self.params.get(key) {
            Some(ParamValue::Real(r)) => Some(*r),
            _ => None,
        }
    }

    pub fn map(&self, key: &str) -> Option<[f64; 4]> {
        match self.params.get(key) {
            Some(ParamValue::Map(m)) => Some(*m),
            _ => None,
        }
    }

    pub fn flag(&self, key: &str) -> bool {
        matches!(self.params.get(key), Some(ParamValue::Bool(true)))
    }

    pub fn text(&self, key: &str) -> Option<&str> {
        match self.params.get(key) {
            Some(ParamValue::Text(s)) => Some(s),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Section {
    None,
    Norm,
    Run,
}

/// Accumulates `key = value` assignments from a file and then from
/// command-line overrides.
#[derive(Debug, Default)]
pub struct ConfigBuilder {
    kind: Option<(String, usize)>,
    p: Option<(f64, usize)>,
    vertices: Option<(Vec<Vec2>, usize)>,
    command: Option<Command>,
    params: BTreeMap<String, ParamValue>,
    output: Option<PathBuf>,
}

fn parse_real(s: &str) -> std::result::Result<f64, String> {
    let t = s.trim();
    match t.to_ascii_lowercase().as_str() {
        "inf" | "infinity" | "+inf" | "∞" => return Ok(f64::INFINITY),
        _ => {}
    }
    t.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| format!("malformed number '{t}'"))
}

fn parse_reals(s: &str, n: usize) -> std::result::Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != n {
        return Err(format!("expected {n} comma-separated numbers, got '{}'", s.trim()));
    }
    parts.into_iter().map(parse_real).collect()
}

/// Parses `"x,y"`.
pub fn parse_vector(s: &str) -> std::result::Result<Vec2, String> {
    let v = parse_reals(s, 2)?;
    Ok(Vec2::new(v[0], v[1]))
}

impl ConfigBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Applies one assignment; `line` is used for later error messages
    /// (0 for command-line overrides).
    pub fn set(&mut self, key: &str, value: &str, line: usize) -> std::result::Result<(), String> {
        let key = key.trim().to_ascii_lowercase();
        let value = value.trim();
        match key.as_str() {
            "kind" => {
                let k = value.to_ascii_lowercase();
                if !["euclidean", "lp", "polygon"].contains(&k.as_str()) {
                    return Err(format!("unknown norm kind '{value}'"));
                }
                self.kind = Some((k, line));
            }
            "p" => {
                let p = parse_real(value)?;
                if p.is_nan() || p < 1.0 {
                    return Err("p must be ≥ 1".into());
                }
                self.p = Some((p, line));
            }
            "vertices" => {
                let pts = value
                    .split(';')
                    .filter(|s| !s.trim().is_empty())
                    .map(parse_vector)
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                self.vertices = Some((pts, line));
            }
            "command" => self.command = Some(value.parse()?),
            "output" => {
                if value.is_empty() {
                    return Err("empty output path".into());
                }
                self.output = Some(PathBuf::from(value));
            }
            _ => {
                let kind = param_kind(&key).ok_or_else(|| format!("unknown key '{key}'"))?;
                let parsed = match kind {
                    ParamKind::Vector => ParamValue::Vector(parse_vector(value)?),
                    ParamKind::Int => ParamValue::Int(
                        value
                            .parse()
                            .map_err(|_| format!("malformed integer '{value}'"))?,
                    ),
                    ParamKind::Real => ParamValue::Real(parse_real(value)?),
                    ParamKind::Map => {
                        let m = parse_reals(value, 4)?;
                        ParamValue::Map([m[0], m[1], m[2], m[3]])
                    }
                    ParamKind::Bool => ParamValue::Bool(match value.to_ascii_lowercase().as_str() {
                        "true" | "yes" | "1" | "" => true,
                        "false" | "no" | "0" => false,
                        _ => return Err(format!("malformed boolean '{value}'")),
                    }),
                    ParamKind::Choice(options) => {
                        let v = value.to_ascii_lowercase();
                        if !options.contains(&v.as_str()) {
                            return Err(format!(
                                "'{key}' must be one of {}, got '{value}'",
                                options.join(", ")
                            ));
                        }
                        ParamValue::Text(v)
                    }
                };
                self.params.insert(key, parsed);
            }
        }
        Ok(())
    }

    /// Builds the norm and the final configuration.
    pub fn finish(self) -> Result<RunConfig> {
        let err = |line: usize, message: String| Error::Config { line, message };
        let kind = match &self.kind {
            Some((k, line)) => Some((k.as_str(), *line)),
            None if self.vertices.is_some() => Some(("polygon", self.vertices.as_ref().unwrap().1)),
            None if self.p.is_some() => Some(("lp", self.p.unwrap().1)),
            None => None,
        };
        let norm = match kind {
            None | Some(("euclidean", _)) => NormSpec::euclidean(),
            Some(("lp", line)) => {
                let (p, pline) = self
                    .p
                    .ok_or_else(|| err(line, "kind = lp needs a value for p".into()))?;
                NormSpec::lp(p).map_err(|e| err(pline, e.to_string()))?
            }
            Some((_, line)) => {
                let (pts, vline) = self
                    .vertices
                    .as_ref()
                    .ok_or_else(|| err(line, "kind = polygon needs vertices".into()))?;
                NormSpec::polygon(pts).map_err(|e| err(*vline, e.to_string()))?
            }
        };
        Ok(RunConfig {
            norm,
            command: self.command,
            params: self.params,
            output: self.output,
        })
    }

    /// Reads a whole config text into the builder.
    pub fn read(&mut self, text: &str) -> Result<()> {
        let mut section = Section::None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| Error::Config { line, message };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(name) = content.strip_prefix('[') {
                let name = name
                    .strip_suffix(']')
                    .ok_or_else(|| err(format!("malformed section header '{content}'")))?;
                section = match name.trim().to_ascii_lowercase().as_str() {
                    "norm" => Section::Norm,
                    "run" => Section::Run,
                    other => return Err(err(format!("unknown section '[{other}]'"))),
                };
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| err(format!("expected 'key = value', got '{content}'")))?;
            let k = key.trim().to_ascii_lowercase();
            let is_norm_key = NORM_KEYS.contains(&k.as_str());
            match section {
                Section::Norm if !is_norm_key => {
                    return Err(err(format!("unknown key '{k}' in [norm]")));
                }
                Section::Run if is_norm_key => {
                    return Err(err(format!("key '{k}' belongs in [norm]")));
                }
                _ => {}
            }
            self.set(&k, value, line).map_err(err)?;
        }
        Ok(())
    }
}

/// Parses a complete configuration text.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut b = ConfigBuilder::new();
    b.read(text)?;
    b.finish()
}

/// Writes a configuration that [`parse_config`] reads back to an equal
/// [`RunConfig`].
pub fn serialize_config(config: &RunConfig) -> String {
    let mut out = String::from("[norm]\n");
    match config.norm.kind() {
        NormKind::Euclidean => out.push_str("kind = euclidean\n"),
        NormKind::Lp { p } => {
            let p = if p.is_infinite() { "inf".to_string() } else { p.to_string() };
            out.push_str(&format!("kind = lp\np = {p}\n"));
        }
        NormKind::Polygon(poly) => {
            let pts: Vec<String> = poly
                .half_vertices()
                .iter()
                .map(|v| format!("{},{}", v.x, v.y))
                .collect();
            out.push_str(&format!("kind = polygon\nvertices = {}\n", pts.join("; ")));
        }
    }
    out.push_str("\n[run]\n");
    if let Some(c) = config.command {
        out.push_str(&format!("command = {c}\n"));
    }
    for (k, v) in &config.params {
        out.push_str(&format!("{k} = {v}\n"));
    }
    if let Some(o) = &config.output {
        out.push_str(&format!("output = {}\n", o.display()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lp_infinity() {
        for token in ["inf", "Infinity", "∞"] {
            let c = parse_config(&format!("kind = lp\np = {token}")).unwrap();
            assert_eq!(c.norm, NormSpec::max_norm());
        }
    }

    #[test]
    fn seven_digit_hexagon() {
        let c = parse_config("kind = polygon\nvertices = 1,0; 0.5,0.8660254; -0.5,0.8660254").unwrap();
        let poly = c.norm.polygon_ref().unwrap();
        assert_eq!(poly.vertices().len(), 6);
        assert!((c.norm.gauge(Vec2::new(0.0, 0.8660254)) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_config("[norm]\nkind = lp\np = 0.5").unwrap_err();
        assert_eq!(e, Error::Config { line: 3, message: "p must be ≥ 1".into() });
        let e = parse_config("[norm]\nkind = polygon\nvertices = 1,0; 0.2,0.2; 0,1; -1,1").unwrap_err();
        assert!(matches!(e, Error::Config { line: 3, .. }), "{e}");
        let e = parse_config("# header\n\n[run]\ncommand = cosine").unwrap_err();
        assert_eq!(e.to_string(), "line 4: unknown command 'cosine'");
        assert!(matches!(parse_config("[run]\nx = 1,zz"), Err(Error::Config { line: 2, .. })));
        assert!(matches!(parse_config("[run]\ncolour = red"), Err(Error::Config { line: 2, .. })));
        assert!(matches!(parse_config("[run]\np = 3"), Err(Error::Config { line: 2, .. })));
        assert!(matches!(parse_config("[nrm]"), Err(Error::Config { line: 1, .. })));
        assert!(matches!(parse_config("kind = lp"), Err(Error::Config { line: 1, .. })));
    }

    #[test]
    fn full_config() {
        let text = "\
# comment line
[NORM]
Kind = LP   # trailing comment
P = 3
[run]
COMMAND = Emit-Circle
which = anticircle
n = 90
svg = true
map = 1,0,0,2
tol = 1e-6
output = circle.svg
";
        let c = parse_config(text).unwrap();
        assert_eq!(c.norm, NormSpec::lp(3.0).unwrap());
        assert_eq!(c.command, Some(Command::EmitCircle));
        assert_eq!(c.text("which"), Some("anticircle"));
        assert_eq!(c.int("n"), Some(90));
        assert!(c.flag("svg"));
        assert_eq!(c.map("map"), Some([1.0, 0.0, 0.0, 2.0]));
        assert_eq!(c.real("tol"), Some(1e-6));
        assert_eq!(c.output, Some(PathBuf::from("circle.svg")));
        assert_eq!(parse_config(&serialize_config(&c)).unwrap(), c);
    }

    #[test]
    fn defaults_to_euclidean() {
        let c = parse_config("[run]\ncommand = sine\nx = 1,0\ny = 0,1").unwrap();
        assert_eq!(c.norm, NormSpec::euclidean());
        assert_eq!(c.vector("y"), Some(Vec2::new(0.0, 1.0)));
    }

    fn arb_norm() -> impl Strategy<Value = NormSpec> {
        prop_oneof![
            Just(NormSpec::euclidean()),
            (1.0..8.0f64).prop_map(|p| NormSpec::lp(p).unwrap()),
            Just(NormSpec::max_norm()),
            (3usize..12).prop_map(|n| NormSpec::regular_polygon(2 * n).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn round_trip(
            norm in arb_norm(),
            cmd in 0usize..14,
            x in (-10.0..10.0f64, -10.0..10.0f64),
            grid in 256u64..5000,
            tol in 1e-12..1e-3f64,
            seed in any::<u64>(),
            svg in any::<bool>(),
        ) {
            let mut params = BTreeMap::new();
            params.insert("x".to_string(), ParamValue::Vector(Vec2::new(x.0, x.1)));
            params.insert("grid".to_string(), ParamValue::Int(grid));
            params.insert("tol".to_string(), ParamValue::Real(tol));
            params.insert("seed".to_string(), ParamValue::Int(seed));
            params.insert("svg".to_string(), ParamValue::Bool(svg));
            params.insert("method".to_string(), ParamValue::Text("direct".into()));
            let c = RunConfig { norm, command: Some(Command::ALL[cmd]), params, output: Some("o.csv".into()) };
            prop_assert_eq!(parse_config(&serialize_config(&c)).unwrap(), c);
        }
    }
}
