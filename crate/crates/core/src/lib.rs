//! Generalized sine function for two-dimensional normed (Minkowski) planes.
//!
//! The sine of two directions `x`, `y` is the norm-distance from the origin
//! to the line `t -> x + t y` (with `x`, `y` scaled to the unit circle). Built
//! on top of it: Birkhoff, isosceles and Roberts orthogonality, antinorms and
//! Radon detection, angular bisectors, the constants `c_E`, `c_R`, `D(X)`,
//! sine-conformal linear maps and the Law of Sines.
//!
//! Norms are Euclidean, `ℓp`, or centrally symmetric convex polygons. The
//! symplectic form is always the plain determinant `[x, y] = x1 y2 - x2 y1`.

pub mod cli;
pub mod config;
pub mod constants;
pub mod error;
pub mod norm;
pub mod optim;
pub mod orthogonality;
pub mod polygon;
pub mod reproduce;
pub mod sine;
pub mod trig;
pub mod vec2;

#[cfg(test)]
pub(crate) mod oracle;

pub use error::{Error, Result};
pub use norm::{AntinormValue, Circle, NormKind, NormSpec, RadonReport, DEFAULT_TOL};

pub use orthogonality::{BirkhoffDefect, ConjugateFamily, ConjugatePair};
pub use polygon::Polygon;
pub use sine::{Method, PolarCoords, SineValue};

pub use vec2::{symplectic, Vec2};
