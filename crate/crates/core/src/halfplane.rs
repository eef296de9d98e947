//! Closed half-planes and their common intersection.

use std::collections::VecDeque;
use std::f64::consts::PI;

use crate::geom::{Point, Vec2, EPS};
use crate::polygon::ConvexPolygon;

/// The closed set `{(x, y) : a*x + b*y <= c}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HalfPlane {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        HalfPlane { a, b, c }
    }

    /// Half-plane bounded by the line through `p -> q` whose interior is the
    /// left side, so a CCW polygon is the intersection of its edge
    /// half-planes.
    pub fn from_edge(p: Point, q: Point) -> Self {
        let e = q - p;
        // Outward normal of a CCW edge is the clockwise perpendicular.
        let n = Vec2::new(e.y, -e.x);
        HalfPlane::new(n.x, n.y, n.x * p.x + n.y * p.y)
    }

    pub fn normal(&self) -> Vec2 {
        Vec2::new(self.a, self.b)
    }

    /// `c - (a*x + b*y)`: nonnegative inside, zero on the boundary line.
    pub fn slack(&self, p: Point) -> f64 {
        self.c - (self.a * p.x + self.b * p.y)
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.slack(p) >= -tol
    }

    fn normalized(&self) -> Option<HalfPlane> {
        let n = self.normal().norm();
        if !n.is_finite() || n <= EPS * EPS {
            return None;
        }
        Some(HalfPlane::new(self.a / n, self.b / n, self.c / n))
    }
}

/// Classification of an intersection of half-planes.
#[derive(Debug, Clone, PartialEq)]
pub enum HalfPlaneIntersection {
    Empty,
    Unbounded,
    Bounded(ConvexPolygon),
}

/// Common intersection of a set of closed half-planes.
///
/// Returns `Empty` when no point satisfies all constraints (sets of measure
/// zero also collapse to `Empty`), `Unbounded` when the constraint normals do
/// not positively span the plane and the constraints are consistent, and the
/// CCW polygon of the intersection otherwise. Runs in O(n log n).
pub fn halfplane_intersection(planes: &[HalfPlane]) -> HalfPlaneIntersection {
    // Normalize; degenerate normals reduce to `0 <= c`.
    let mut hs: Vec<HalfPlane> = Vec::with_capacity(planes.len());
    for hp in planes {
        match hp.normalized() {
            Some(h) => hs.push(h),
            None => {
                if hp.c < 0.0 {
                    return HalfPlaneIntersection::Empty;
                }
            }
        }
    }
    if hs.is_empty() {
        return HalfPlaneIntersection::Unbounded;
    }

    hs.sort_by(|l, r| l.normal().angle().partial_cmp(&r.normal().angle()).unwrap());

    // Coalesce same-direction constraints, keeping the most restrictive.
    let mut merged: Vec<HalfPlane> = Vec::with_capacity(hs.len());
    for h in hs {
        match merged.last_mut() {
            Some(last) if (last.normal() - h.normal()).norm() <= EPS => {
                if h.c < last.c {
                    *last = h;
                }
            }
            _ => merged.push(h),
        }
    }
    // The first and last of the sorted ring can be the same direction across
    // the -pi/pi seam only if angles differ by ~2*pi, which normalized
    // angles cannot; no wrap-around coalesce needed.

    // Anti-parallel consistency: n.x <= c_u together with -n.x <= c_l is
    // infeasible when c_u + c_l < 0.
    for i in 0..merged.len() {
        for j in (i + 1)..merged.len() {
            if (merged[i].normal() + merged[j].normal()).norm() <= EPS
                && merged[i].c + merged[j].c < -EPS
            {
                return HalfPlaneIntersection::Empty;
            }
        }
    }

    // Boundedness: the feasible set is bounded iff the normals positively
    // span the plane, i.e. every cyclic angular gap is below pi.
    let angles: Vec<f64> = merged.iter().map(|h| h.normal().angle()).collect();
    let mut max_gap: f64 = 0.0;
    for i in 0..angles.len() {
        let next = if i + 1 == angles.len() {
            angles[0] + 2.0 * PI
        } else {
            angles[i + 1]
        };
        max_gap = max_gap.max(next - angles[i]);
    }
    if max_gap >= PI - 1e-12 {
        return HalfPlaneIntersection::Unbounded;
    }

    match deque_sweep(&merged) {
        Some(verts) => match ConvexPolygon::new(verts) {
            Ok(poly) => HalfPlaneIntersection::Bounded(poly),
            Err(_) => HalfPlaneIntersection::Empty,
        },
        None => HalfPlaneIntersection::Empty,
    }
}

/// Incremental deque sweep over angle-sorted, direction-unique constraints.
/// Requires the feasible set to be bounded; returns its vertices or `None`
/// when the constraints admit no 2-dimensional region.
fn deque_sweep(hs: &[HalfPlane]) -> Option<Vec<Point>> {
    let violates = |h: &HalfPlane, p: Option<Point>| match p {
        Some(p) => !h.contains(p, EPS),
        None => true,
    };

    let mut dq: VecDeque<usize> = VecDeque::new();
    for i in 0..hs.len() {
        while dq.len() >= 2 {
            let p = boundary_intersection(&hs[dq[dq.len() - 2]], &hs[dq[dq.len() - 1]]);
            if violates(&hs[i], p) {
                dq.pop_back();
            } else {
                break;
            }
        }
        while dq.len() >= 2 {
            let p = boundary_intersection(&hs[dq[0]], &hs[dq[1]]);
            if violates(&hs[i], p) {
                dq.pop_front();
            } else {
                break;
            }
        }
        dq.push_back(i);
    }
    while dq.len() >= 3 {
        let p = boundary_intersection(&hs[dq[dq.len() - 2]], &hs[dq[dq.len() - 1]]);
        if violates(&hs[dq[0]], p) {
            dq.pop_back();
        } else {
            break;
        }
    }
    while dq.len() >= 3 {
        let p = boundary_intersection(&hs[dq[0]], &hs[dq[1]]);
        if violates(&hs[dq[dq.len() - 1]], p) {
            dq.pop_front();
        } else {
            break;
        }
    }

    if dq.len() < 3 {
        return None;
    }
    let m = dq.len();
    let mut verts = Vec::with_capacity(m);
    for k in 0..m {
        let p = boundary_intersection(&hs[dq[k]], &hs[dq[(k + 1) % m]])?;
        verts.push(p);
    }
    Some(verts)
}

/// Intersection of the two boundary lines; `None` for (near-)parallel pairs.
fn boundary_intersection(h1: &HalfPlane, h2: &HalfPlane) -> Option<Point> {
    let det = h1.a * h2.b - h2.a * h1.b;
    if det.abs() <= 1e-14 {
        return None;
    }
    Some(Point::new(
        (h1.c * h2.b - h2.c * h1.b) / det,
        (h1.a * h2.c - h2.a * h1.c) / det,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    fn bounded(planes: &[HalfPlane]) -> ConvexPolygon {
        match halfplane_intersection(planes) {
            HalfPlaneIntersection::Bounded(p) => p,
            other => panic!("expected bounded intersection, got {other:?}"),
        }
    }

    #[test]
    fn axis_box() {
        let sq = bounded(&[
            HalfPlane::new(1.0, 0.0, 1.0),
            HalfPlane::new(-1.0, 0.0, 1.0),
            HalfPlane::new(0.0, 1.0, 1.0),
            HalfPlane::new(0.0, -1.0, 1.0),
        ]);
        assert_eq!(sq.len(), 4);
        assert!((sq.area() - 4.0).abs() < 1e-12);
        assert_eq!(sq.vertices()[0], Point::new(-1.0, -1.0));
    }

    #[test]
    fn contradictory_is_empty() {
        let r = halfplane_intersection(&[
            HalfPlane::new(1.0, 0.0, 1.0),
            HalfPlane::new(-1.0, 0.0, -2.0),
        ]);
        assert_eq!(r, HalfPlaneIntersection::Empty);
    }

    #[test]
    fn diamond_from_diagonal_constraints() {
        let d = bounded(&[
            HalfPlane::new(1.0, 1.0, 1.0),
            HalfPlane::new(-1.0, 1.0, 1.0),
            HalfPlane::new(1.0, -1.0, 1.0),
            HalfPlane::new(-1.0, -1.0, 1.0),
        ]);
        assert_eq!(d.len(), 4);
        for want in [
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(-1.0, 0.0),
            Point::new(0.0, -1.0),
        ] {
            assert!(
                d.vertices().iter().any(|v| (*v - want).norm() < 1e-12),
                "missing vertex {want:?}"
            );
        }
    }

    #[test]
    fn wedge_is_unbounded() {
        let r = halfplane_intersection(&[
            HalfPlane::new(-1.0, 0.0, 0.0),
            HalfPlane::new(0.0, -1.0, 0.0),
        ]);
        assert_eq!(r, HalfPlaneIntersection::Unbounded);
        let r = halfplane_intersection(&[HalfPlane::new(1.0, 0.0, 1.0)]);
        assert_eq!(r, HalfPlaneIntersection::Unbounded);
    }

    #[test]
    fn measure_zero_collapses_to_empty() {
        // Feasible set is the single point (1, 0).
        let r = halfplane_intersection(&[
            HalfPlane::new(1.0, 0.0, 1.0),
            HalfPlane::new(-1.0, 0.0, -1.0),
            HalfPlane::new(0.0, 1.0, 0.0),
            HalfPlane::new(0.0, -1.0, 0.0),
        ]);
        assert_eq!(r, HalfPlaneIntersection::Empty);
    }

    #[test]
    fn redundant_constraints_are_dropped() {
        let sq = bounded(&[
            HalfPlane::new(1.0, 0.0, 1.0),
            HalfPlane::new(2.0, 0.0, 10.0),
            HalfPlane::new(-1.0, 0.0, 1.0),
            HalfPlane::new(0.0, 1.0, 1.0),
            HalfPlane::new(0.0, -1.0, 1.0),
            HalfPlane::new(1.0, 1.0, 5.0),
        ]);
        assert_eq!(sq.len(), 4);
        assert!((sq.area() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn feeding_edges_back_is_idempotent() {
        let sq = bounded(&[
            HalfPlane::new(1.0, 0.2, 1.0),
            HalfPlane::new(-1.0, 0.1, 1.3),
            HalfPlane::new(0.3, 1.0, 0.9),
            HalfPlane::new(-0.1, -1.0, 1.1),
            HalfPlane::new(1.0, 1.0, 1.5),
        ]);
        let again = bounded(&sq.halfplanes());
        assert_eq!(sq.len(), again.len());
        for (a, b) in sq.vertices().iter().zip(again.vertices()) {
            assert!((*a - *b).norm() < 1e-9);
        }
    }
}
