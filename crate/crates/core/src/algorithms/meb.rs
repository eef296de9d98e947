//! Minimum enclosing ball of a point set (Euclidean).

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::Point;

/// A Euclidean circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Self {
        Circle { center, radius }
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.center.distance(p) <= self.radius + tol
    }
}

// Multiplicative slack for the incremental containment tests; keeps the
// recursion from re-deriving circles for points that are on the boundary up
// to rounding.
const REL_TOL: f64 = 1e-12;

/// Smallest circle containing every point, by Welzl-style randomized
/// incremental construction in expected linear time. The shuffle is driven
/// by the seed, the result is not: the minimum enclosing circle is unique.
pub fn min_enclosing_ball_seeded(points: &[Point], seed: u64) -> Result<Circle> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut pts = points.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pts.shuffle(&mut rng);

    let mut circle = Circle::new(pts[0], 0.0);
    for i in 1..pts.len() {
        if !contains_slack(&circle, pts[i]) {
            circle = circle_with_one(&pts[..i], pts[i]);
        }
    }
    Ok(circle)
}

/// [`min_enclosing_ball_seeded`] with the default seed 0.
pub fn min_enclosing_ball(points: &[Point]) -> Result<Circle> {
    min_enclosing_ball_seeded(points, 0)
}

fn contains_slack(c: &Circle, p: Point) -> bool {
    c.contains(p, REL_TOL * (1.0 + c.radius))
}

/// Smallest circle over `points` with `p` on its boundary.
fn circle_with_one(points: &[Point], p: Point) -> Circle {
    let mut circle = Circle::new(p, 0.0);
    for i in 0..points.len() {
        if !contains_slack(&circle, points[i]) {
            circle = if circle.radius == 0.0 {
                diameter_circle(p, points[i])
            } else {
                circle_with_two(&points[..i], p, points[i])
            };
        }
    }
    circle
}

/// Smallest circle over `points` with both `p` and `q` on its boundary.
fn circle_with_two(points: &[Point], p: Point, q: Point) -> Circle {
    let base = diameter_circle(p, q);
    let pq = q - p;
    let mut left: Option<Circle> = None;
    let mut right: Option<Circle> = None;

    for &r in points {
        if contains_slack(&base, r) {
            continue;
        }
        let side = pq.cross(r - p);
        let Some(c) = circumcircle(p, q, r) else {
            continue;
        };
        let lever = pq.cross(c.center - p);
        if side > 0.0 && left.is_none_or(|l| lever > pq.cross(l.center - p)) {
            left = Some(c);
        } else if side < 0.0 && right.is_none_or(|l| lever < pq.cross(l.center - p)) {
            right = Some(c);
        }
    }

    match (left, right) {
        (None, None) => base,
        (Some(l), None) => l,
        (None, Some(r)) => r,
        (Some(l), Some(r)) => {
            if l.radius <= r.radius {
                l
            } else {
                r
            }
        }
    }
}

fn diameter_circle(a: Point, b: Point) -> Circle {
    let center = Point::new((a.x + b.x) / 2.0, (a.y + b.y) / 2.0);
    Circle::new(center, center.distance(a).max(center.distance(b)))
}

/// Circumcircle of three points; `None` when they are close to collinear,
/// in which case the caller falls back to the widest two-point circle.
fn circumcircle(a: Point, b: Point, c: Point) -> Option<Circle> {
    // Shift into a local frame for conditioning.
    let ox = (a.x.min(b.x).min(c.x) + a.x.max(b.x).max(c.x)) / 2.0;
    let oy = (a.y.min(b.y).min(c.y) + a.y.max(b.y).max(c.y)) / 2.0;
    let (ax, ay) = (a.x - ox, a.y - oy);
    let (bx, by) = (b.x - ox, b.y - oy);
    let (cx, cy) = (c.x - ox, c.y - oy);
    let d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    let scale = ax.abs().max(ay.abs()).max(bx.abs()).max(by.abs()).max(cx.abs()).max(cy.abs());
    if d.abs() <= 1e-14 * scale * scale {
        return None;
    }
    let x = ((ax * ax + ay * ay) * (by - cy)
        + (bx * bx + by * by) * (cy - ay)
        + (cx * cx + cy * cy) * (ay - by))
        / d;
    let y = ((ax * ax + ay * ay) * (cx - bx)
        + (bx * bx + by * by) * (ax - cx)
        + (cx * cx + cy * cy) * (bx - ax))
        / d;
    let center = Point::new(ox + x, oy + y);
    let radius = center.distance(a).max(center.distance(b)).max(center.distance(c));
    Some(Circle::new(center, radius))
}
