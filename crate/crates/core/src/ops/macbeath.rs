//! Macbeath regions.

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::ops::boolean::clip_halfplane;
use crate::polygon::ConvexPolygon;

/// The Macbeath region of `omega` at the interior point `x`: intersect the
/// polygon with its point reflection through `x`. It is the largest
/// centrally symmetric convex body about `x` contained in `omega`.
///
/// Computed by clipping `omega` against the reflected polygon's edge
/// half-planes one at a time (independent of the half-plane-intersection
/// route used by [`crate::ops::intersect`]).
pub fn macbeath_region(omega: &ConvexPolygon, x: Point) -> Result<ConvexPolygon> {
    if !omega.contains_interior(x) {
        return Err(Error::OriginNotInterior);
    }
    let reflected = omega.reflected_through(x);
    let mut region = omega.clone();
    for hp in reflected.halfplanes() {
        region = clip_halfplane(&region, &hp).ok_or(Error::OriginNotInterior)?;
    }
    Ok(region)
}
