//! Metric balls in the Funk, reverse Funk, and Hilbert metrics.
//!
//! All three balls in a polygonal domain are polygons, and every boundary
//! point is computed in closed form by solving the one-dimensional log or
//! cross-ratio equation along a ray, never by numerical root finding.

use crate::error::{Error, Result};
use crate::geom::{Chord, Point};
use crate::metrics::{spokes, MetricKind};
use crate::ops::intersect;
use crate::polygon::ConvexPolygon;

/// A metric ball: a convex polygon tagged with its metric, center and
/// radius (log-scale), plus the spokes used to construct it when requested.
#[derive(Debug, Clone, PartialEq)]
pub struct Ball {
    pub kind: MetricKind,
    pub center: Point,
    pub radius: f64,
    pub boundary: ConvexPolygon,
    pub spokes: Option<Vec<Chord>>,
}

/// Forward Funk ball of radius `r` around `p`: the domain shrunk toward `p`
/// by the factor `1 - e^(-r)`. It has exactly as many vertices as the
/// domain and never reaches the domain boundary.
pub fn funk_ball(omega: &ConvexPolygon, p: Point, r: f64) -> Result<Ball> {
    check_center_radius(omega, p, r)?;
    let s = 1.0 - (-r).exp();
    let boundary = omega.scaled_about(p, s)?;
    Ok(Ball {
        kind: MetricKind::Funk,
        center: p,
        radius: r,
        boundary,
        spokes: None,
    })
}

/// Reverse Funk ball of radius `r` around `p`: the reflected copy of the
/// domain scaled about `p` by `e^r - 1`, clipped to the domain. The reverse
/// Funk distance to the boundary is finite, so large radii saturate to the
/// whole domain.
pub fn reverse_funk_ball(omega: &ConvexPolygon, p: Point, r: f64) -> Result<Ball> {
    check_center_radius(omega, p, r)?;
    // Cap the reflection factor once the reflected copy is guaranteed to
    // cover the domain; this keeps enormous radii finite without changing
    // the clipped result.
    let reach = omega
        .vertices()
        .iter()
        .map(|v| (*v - p).norm())
        .fold(0.0_f64, f64::max);
    let depth = omega.boundary_margin(p);
    let cap = 2.0 * reach / depth;
    let factor = (r.exp() - 1.0).min(cap);

    let reflected: Vec<Point> = omega
        .vertices()
        .iter()
        .rev()
        .map(|v| p - (*v - p) * factor)
        .collect();
    let copy = ConvexPolygon::new(reflected)?;
    let boundary = intersect(&copy, omega).ok_or(Error::OriginNotInterior)?;
    Ok(Ball {
        kind: MetricKind::ReverseFunk,
        center: p,
        radius: r,
        boundary,
        spokes: None,
    })
}

/// Hilbert ball of radius `r` around `p`. Along each spoke ray the point at
/// Hilbert distance exactly `r` solves the cross-ratio equation in closed
/// form; the ball is the polygon through these points in angular order,
/// with at most two vertices per domain vertex.
pub fn hilbert_ball(omega: &ConvexPolygon, p: Point, r: f64, with_spokes: bool) -> Result<Ball> {
    check_center_radius(omega, p, r)?;
    let chords = spokes(omega, p)?;

    let mut verts: Vec<(f64, Point)> = Vec::with_capacity(2 * chords.len());
    for chord in &chords {
        for (endpoint, opposite) in [(chord.second, chord.first), (chord.first, chord.second)] {
            let u = endpoint - p;
            // Ray parameter of the forward exit is 1 by construction; the
            // backward exit sits at t_b in the same units.
            let t_b = (opposite - p).norm() / u.norm();
            // Solving exp(2r) = (1 / (1 - t)) * ((t_b + t) / t_b) for t,
            // written with a = exp(-2r) so it stays finite for any radius.
            let a = (-2.0 * r).exp();
            let t = t_b * (1.0 - a) / (a + t_b);
            let v = p + u * t;
            verts.push(((v - p).angle(), v));
        }
    }
    verts.sort_by(|l, r| l.0.partial_cmp(&r.0).unwrap());
    let boundary = ConvexPolygon::new(verts.into_iter().map(|(_, v)| v).collect())?;
    Ok(Ball {
        kind: MetricKind::Hilbert,
        center: p,
        radius: r,
        boundary,
        spokes: with_spokes.then_some(chords),
    })
}

fn check_center_radius(omega: &ConvexPolygon, p: Point, r: f64) -> Result<()> {
    if !omega.contains_interior(p) {
        return Err(Error::OriginNotInterior);
    }
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::NonpositiveRadius);
    }
    Ok(())
}
