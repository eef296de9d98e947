//! Base planar primitives: points, vectors, the orientation predicate, and
//! the global tolerance used by every other module.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Global tolerance, in plane units.
///
/// One knob governs all approximate predicates: collinearity, on-boundary
/// classification, and coincidence tests. "Strictly interior" always means
/// more than `EPS` away from the boundary.
pub const EPS: f64 = 1e-9;

/// A location in the affine plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// A displacement between points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: Point) -> f64 {
        (*self - other).norm()
    }

    /// Point reflection through `center`: `2 * center - self`.
    pub fn reflected_through(&self, center: Point) -> Point {
        Point::new(2.0 * center.x - self.x, 2.0 * center.y - self.y)
    }
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_squared(&self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dot(&self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product `self x other`.
    pub fn cross(&self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn angle(&self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Counterclockwise perpendicular.
    pub fn perp(&self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }
}

impl Sub for Point {
    type Output = Vec2;
    fn sub(self, rhs: Point) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vec2> for Point {
    type Output = Point;
    fn add(self, rhs: Vec2) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub<Vec2> for Point {
    type Output = Point;
    fn sub(self, rhs: Vec2) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    fn div(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x / rhs, self.y / rhs)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Turn direction of the ordered triple `(p, q, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

/// Sign of the cross product `(q - p) x (r - p)`, with magnitudes up to
/// [`EPS`] reported as collinear.
pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    let v = (q - p).cross(r - p);
    if v > EPS {
        Orientation::CounterClockwise
    } else if v < -EPS {
        Orientation::Clockwise
    } else {
        Orientation::Collinear
    }
}

/// Classification of a point against a closed convex region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

/// A chord of a convex body: the two intersections of a line with the
/// boundary, ordered along the line direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chord {
    pub first: Point,
    pub second: Point,
}

impl Chord {
    pub fn new(first: Point, second: Point) -> Self {
        Chord { first, second }
    }

    pub fn direction(&self) -> Vec2 {
        self.second - self.first
    }

    pub fn length(&self) -> f64 {
        self.direction().norm()
    }
}
