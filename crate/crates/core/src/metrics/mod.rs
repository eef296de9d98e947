//! The Funk, reverse Funk, and Hilbert distance functions on a convex
//! polygonal domain, their spokes, and the metric-ball constructors.
//!
//! All distances are in natural-logarithm units. Points within [`EPS`]
//! (crate-global tolerance) of the domain boundary are rejected rather than
//! clamped: the Funk and Hilbert distances diverge there and clamping would
//! hide the instability.

mod ball;

pub use ball::{funk_ball, hilbert_ball, reverse_funk_ball, Ball};

use crate::error::{Error, Result};
use crate::geom::{Chord, Point, EPS};
use crate::polygon::ConvexPolygon;

/// Which of the three metrics a ball or request refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricKind {
    Funk,
    ReverseFunk,
    Hilbert,
}

impl MetricKind {
    pub fn name(&self) -> &'static str {
        match self {
            MetricKind::Funk => "funk",
            MetricKind::ReverseFunk => "reverse_funk",
            MetricKind::Hilbert => "hilbert",
        }
    }
}

/// Distance in `kind`'s metric between two interior points.
pub fn distance(omega: &ConvexPolygon, kind: MetricKind, p: Point, q: Point) -> Result<f64> {
    match kind {
        MetricKind::Funk => funk_distance(omega, p, q),
        MetricKind::ReverseFunk => reverse_funk_distance(omega, p, q),
        MetricKind::Hilbert => hilbert_distance(omega, p, q),
    }
}

/// Forward Funk distance: with `q'` the exit of the ray from `p` through
/// `q`, the value is `ln(|p - q'| / |q - q'|)`. Asymmetric; zero exactly on
/// the diagonal.
pub fn funk_distance(omega: &ConvexPolygon, p: Point, q: Point) -> Result<f64> {
    check_interior(omega, p)?;
    check_interior(omega, q)?;
    if (p - q).norm() <= EPS {
        return Ok(0.0);
    }
    // With q at parameter 1 of the ray and the exit at parameter t > 1,
    // the two chord lengths reduce to t and t - 1.
    let t = omega.ray_exit_parameter(p, q - p)?;
    Ok((t / (t - 1.0)).ln())
}

/// Reverse Funk distance `ln(|p' - q| / |p' - p|)` with `p'` the exit of the
/// ray from `q` through `p`; identical to the forward distance with the
/// arguments swapped.
pub fn reverse_funk_distance(omega: &ConvexPolygon, p: Point, q: Point) -> Result<f64> {
    funk_distance(omega, q, p)
}

/// Hilbert distance: half the log cross ratio of `(p', p, q, q')` along the
/// chord through `p` and `q`, equal to the mean of the forward and reverse
/// Funk distances. Symmetric.
pub fn hilbert_distance(omega: &ConvexPolygon, p: Point, q: Point) -> Result<f64> {
    Ok(0.5 * (funk_distance(omega, p, q)? + reverse_funk_distance(omega, p, q)?))
}

/// Spokes of `omega` at `p`: the full chord of the line through `p` and
/// each vertex, sorted by the angle of the vertex direction. Vertices
/// opposite each other through `p` produce one chord, merged within an
/// angular tolerance, so a polygon with `m` vertices yields at most `m`
/// chords and exactly `2m` boundary points counted with multiplicity.
pub fn spokes(omega: &ConvexPolygon, p: Point) -> Result<Vec<Chord>> {
    check_interior(omega, p)?;
    let mut dirs: Vec<(f64, Point)> = Vec::with_capacity(omega.len());
    for v in omega.vertices() {
        if (*v - p).norm() <= EPS {
            return Err(Error::VertexCoincidence);
        }
        dirs.push(((*v - p).angle(), *v));
    }
    dirs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    let mut chords: Vec<(f64, Chord)> = Vec::new();
    for (angle, v) in dirs {
        let line_angle = normalize_mod_pi(angle);
        let duplicate = chords
            .iter()
            .any(|(a, _)| (a - line_angle).abs() <= EPS || ((a - line_angle).abs() - std::f64::consts::PI).abs() <= EPS);
        if duplicate {
            continue;
        }
        let backward = omega.ray_boundary_intersection(p, p - v)?;
        chords.push((line_angle, Chord::new(backward, v)));
    }
    Ok(chords.into_iter().map(|(_, c)| c).collect())
}

fn normalize_mod_pi(angle: f64) -> f64 {
    let mut a = angle % std::f64::consts::PI;
    if a < 0.0 {
        a += std::f64::consts::PI;
    }
    a
}

fn check_interior(omega: &ConvexPolygon, p: Point) -> Result<()> {
    if omega.contains_interior(p) {
        Ok(())
    } else {
        Err(Error::OriginNotInterior)
    }
}
