//! Polar duality.

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::halfplane::{halfplane_intersection, HalfPlane, HalfPlaneIntersection};
use crate::polygon::ConvexPolygon;

/// The polar dual of a convex polygon strictly containing the origin: the
/// intersection of the half-planes `a_i * x + b_i * y <= 1` over the
/// vertices `(a_i, b_i)`. Vertices of the primal become edges of the dual
/// and vice versa; the dual is bounded exactly because the origin is
/// interior.
pub fn polar_dual(omega: &ConvexPolygon) -> Result<ConvexPolygon> {
    if !omega.contains_interior(Point::new(0.0, 0.0)) {
        return Err(Error::OriginNotInterior);
    }
    let planes: Vec<HalfPlane> = omega
        .vertices()
        .iter()
        .map(|v| HalfPlane::new(v.x, v.y, 1.0))
        .collect();
    match halfplane_intersection(&planes) {
        HalfPlaneIntersection::Bounded(p) => Ok(p),
        // Unreachable for a strictly interior origin; surface as an error
        // rather than panicking on adversarially thin input.
        _ => Err(Error::OriginNotInterior),
    }
}
