use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A point or direction in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Unit Euclidean direction at angle `theta` (radians).
    #[inline]
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Vec2::new(c, s)
    }

    #[inline]
    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// The fixed symplectic form `[self, other]`, i.e. the 2x2 determinant.
    #[inline]
    pub fn det(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    /// Counterclockwise quarter turn.
    #[inline]
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    #[inline]
    pub fn euclid(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.x == 0.0 && self.y == 0.0
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Angle in `(-pi, pi]`.
    #[inline]
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Angle of the undirected line spanned by `self`, in `[0, pi)`.
    pub fn line_angle(self) -> f64 {
        let a = self.angle();
        let a = if a < 0.0 { a + std::f64::consts::PI } else { a };
        if a >= std::f64::consts::PI {
            0.0
        } else {
            a
        }
    }

    /// Representative of `±self` lying in the upper half-plane (or on the positive x-axis).
    pub fn upper(self) -> Vec2 {
        if self.y > 0.0 || (self.y == 0.0 && self.x > 0.0) {
            self
        } else {
            -self
        }
    }

    /// Sine of the Euclidean angle between the lines spanned by `self` and `other`.
    pub fn euclid_sin(self, other: Vec2) -> f64 {
        self.det(other) / (self.euclid() * other.euclid())
    }
}

/// Angular distance between two undirected lines, in `[0, pi/2]`.
pub fn line_distance(a: Vec2, b: Vec2) -> f64 {
    let d = (a.line_angle() - b.line_angle()).abs();
    d.min(std::f64::consts::PI - d)
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, rhs: Vec2) -> Vec2 {
        rhs * self
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn div(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x / rhs, self.y / rhs)
    }
}

impl From<(f64, f64)> for Vec2 {
    fn from((x, y): (f64, f64)) -> Self {
        Vec2::new(x, y)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The symplectic form `[x, y] = x1*y2 - x2*y1`.
#[inline]
pub fn symplectic(x: Vec2, y: Vec2) -> f64 {
    x.det(y)
}
