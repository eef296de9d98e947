//! Convex polygons and the ray / chord / containment queries built on them.

use crate::error::{Error, Result};
use crate::geom::{Chord, Location, Point, Vec2, EPS};
use crate::halfplane::HalfPlane;

/// A strictly convex polygon with counterclockwise vertex order.
///
/// Construction normalizes its input: clockwise rings are reversed,
/// near-duplicate and near-collinear vertices (within [`EPS`]) are merged,
/// and non-convex input is rejected rather than silently hulled. The vertex
/// ring is rotated to start at the lexicographically smallest vertex so that
/// equal polygons have identical representations.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        if vertices.len() < 3 {
            return Err(Error::TooFewVertices(vertices.len()));
        }

        let mut verts = dedup_cyclic(vertices);
        if verts.len() < 3 {
            return Err(Error::TooFewVertices(verts.len()));
        }
        if signed_area(&verts) < 0.0 {
            verts.reverse();
        }

        // Merge collinear triples, reject reflex ones. Merging can expose new
        // collinearity, so iterate to a fixed point.
        loop {
            let n = verts.len();
            if n < 3 {
                return Err(Error::TooFewVertices(n));
            }
            let mut removed = false;
            let mut kept: Vec<Point> = Vec::with_capacity(n);
            for i in 0..n {
                let prev = verts[(i + n - 1) % n];
                let cur = verts[i];
                let next = verts[(i + 1) % n];
                let e = cur - prev;
                let len = e.norm();
                // Distance of `next` from the line through prev -> cur.
                let d = e.cross(next - prev) / len;
                if d < -EPS {
                    return Err(Error::NonConvex);
                }
                if d <= EPS {
                    removed = true;
                } else {
                    kept.push(cur);
                }
            }
            if !removed {
                break;
            }
            verts = dedup_cyclic(kept);
        }

        rotate_to_canonical_start(&mut verts);
        Ok(ConvexPolygon { vertices: verts })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Edge from vertex `i` to vertex `i + 1` (cyclic).
    pub fn edge(&self, i: usize) -> (Point, Point) {
        let n = self.vertices.len();
        (self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        (0..self.vertices.len()).map(move |i| self.edge(i))
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn centroid(&self) -> Point {
        let mut cx = 0.0;
        let mut cy = 0.0;
        let mut a = 0.0;
        for (p, q) in self.edges() {
            let w = p.x * q.y - q.x * p.y;
            cx += (p.x + q.x) * w;
            cy += (p.y + q.y) * w;
            a += w;
        }
        Point::new(cx / (3.0 * a), cy / (3.0 * a))
    }

    pub fn bounding_box(&self) -> (Point, Point) {
        let mut min = self.vertices[0];
        let mut max = self.vertices[0];
        for v in &self.vertices {
            min.x = min.x.min(v.x);
            min.y = min.y.min(v.y);
            max.x = max.x.max(v.x);
            max.y = max.y.max(v.y);
        }
        (min, max)
    }

    /// Signed distance from `p` to the boundary: positive inside, negative
    /// outside (for exterior points this is a lower bound on the true
    /// distance magnitude, but the sign is exact).
    pub fn boundary_margin(&self, p: Point) -> f64 {
        let mut margin = f64::INFINITY;
        for (a, b) in self.edges() {
            let e = b - a;
            let d = e.cross(p - a) / e.norm();
            margin = margin.min(d);
        }
        margin
    }

    /// Classify `p` against the closed polygon with [`EPS`] tolerance around
    /// the boundary.
    pub fn locate(&self, p: Point) -> Location {
        let m = self.boundary_margin(p);
        if m > EPS {
            Location::Interior
        } else if m < -EPS {
            Location::Exterior
        } else {
            Location::Boundary
        }
    }

    /// True when `p` is more than [`EPS`] inside the boundary.
    pub fn contains_interior(&self, p: Point) -> bool {
        self.locate(p) == Location::Interior
    }

    /// Parameter `t > 0` at which the ray `origin + t * dir` crosses the
    /// boundary. `origin` must be strictly interior and `dir` nonzero.
    pub fn ray_exit_parameter(&self, origin: Point, dir: Vec2) -> Result<f64> {
        if dir.norm() <= EPS {
            return Err(Error::ZeroDirection);
        }
        if !self.contains_interior(origin) {
            return Err(Error::OriginNotInterior);
        }
        let mut t_exit = f64::INFINITY;
        for (a, b) in self.edges() {
            // Outward normal of a CCW edge.
            let n = -(b - a).perp();
            let denom = n.dot(dir);
            if denom > 0.0 {
                let t = n.dot(a - origin) / denom;
                t_exit = t_exit.min(t);
            }
        }
        debug_assert!(t_exit.is_finite() && t_exit > 0.0);
        Ok(t_exit)
    }

    /// The unique point where the ray from `origin` in direction `dir`
    /// crosses the boundary.
    pub fn ray_boundary_intersection(&self, origin: Point, dir: Vec2) -> Result<Point> {
        let t = self.ray_exit_parameter(origin, dir)?;
        Ok(origin + dir * t)
    }

    /// Full chord of the line through two interior points, ordered so the
    /// four points appear as (first, p, q, second) along the line.
    pub fn chord_through(&self, p: Point, q: Point) -> Result<Chord> {
        if (p - q).norm() <= EPS {
            return Err(Error::CoincidentPoints);
        }
        let dir = q - p;
        let forward = self.ray_boundary_intersection(p, dir)?;
        let backward = self.ray_boundary_intersection(p, -dir)?;
        Ok(Chord::new(backward, forward))
    }

    /// Half-plane constraints whose intersection is this polygon, one per
    /// edge, with outward normals.
    pub fn halfplanes(&self) -> Vec<HalfPlane> {
        self.edges().map(|(a, b)| HalfPlane::from_edge(a, b)).collect()
    }

    pub fn translated(&self, t: Vec2) -> ConvexPolygon {
        let verts = self.vertices.iter().map(|v| *v + t).collect();
        ConvexPolygon::new(verts).expect("translation preserves convexity")
    }

    /// Point reflection of the polygon through `center`.
    pub fn reflected_through(&self, center: Point) -> ConvexPolygon {
        let verts = self
            .vertices
            .iter()
            .rev()
            .map(|v| v.reflected_through(center))
            .collect();
        ConvexPolygon::new(verts).expect("reflection preserves convexity")
    }

    /// Homothety about `center` with the given (positive) factor.
    pub fn scaled_about(&self, center: Point, factor: f64) -> Result<ConvexPolygon> {
        let verts = self
            .vertices
            .iter()
            .map(|v| center + (*v - center) * factor)
            .collect();
        ConvexPolygon::new(verts)
    }
}

/// Counterclockwise convex hull with collinear points removed.
pub fn convex_hull(points: &[Point]) -> Result<ConvexPolygon> {
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort_by(|a, b| {
        a.x.partial_cmp(&b.x)
            .unwrap()
            .then(a.y.partial_cmp(&b.y).unwrap())
    });
    pts.dedup_by(|a, b| (*a - *b).norm() <= EPS);
    if pts.len() < 3 {
        return Err(Error::DegenerateHull);
    }

    // Andrew's monotone chain, strict turns only.
    let chain = |iter: &mut dyn Iterator<Item = Point>| {
        let mut out: Vec<Point> = Vec::new();
        for p in iter {
            while out.len() >= 2 {
                let a = out[out.len() - 2];
                let b = out[out.len() - 1];
                if (b - a).cross(p - a) <= EPS {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        out
    };
    let mut lower = chain(&mut pts.iter().copied());
    let mut upper = chain(&mut pts.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    if lower.len() < 3 {
        return Err(Error::DegenerateHull);
    }
    ConvexPolygon::new(lower).map_err(|_| Error::DegenerateHull)
}

fn signed_area(verts: &[Point]) -> f64 {
    let n = verts.len();
    let mut acc = 0.0;
    for i in 0..n {
        let p = verts[i];
        let q = verts[(i + 1) % n];
        acc += p.x * q.y - q.x * p.y;
    }
    acc / 2.0
}

fn dedup_cyclic(verts: Vec<Point>) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(verts.len());
    for v in verts {
        if out.last().is_none_or(|&last| (v - last).norm() > EPS) {
            out.push(v);
        }
    }
    while out.len() >= 2 && (out[0] - *out.last().unwrap()).norm() <= EPS {
        out.pop();
    }
    out
}

fn rotate_to_canonical_start(verts: &mut [Point]) {
    let mut best = 0;
    for i in 1..verts.len() {
        let (a, b) = (verts[i], verts[best]);
        if a.x < b.x || (a.x == b.x && a.y < b.y) {
            best = i;
        }
    }
    verts.rotate_left(best);
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn square2() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(-1.0, -1.0),
            Point::new(1.0, -1.0),
            Point::new(1.0, 1.0),
            Point::new(-1.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn construction_reorients_clockwise_input() {
        let cw = ConvexPolygon::new(vec![
            Point::new(-1.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, -1.0),
            Point::new(-1.0, -1.0),
        ])
        .unwrap();
        assert!(cw.area() > 0.0);
        assert_eq!(cw, square2());
    }

    #[test]
    fn construction_merges_duplicates_and_collinear() {
        let p = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.5, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn construction_rejects_nonconvex() {
        let r = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 0.5),
            Point::new(2.0, 2.0),
            Point::new(0.0, 2.0),
        ]);
        assert_eq!(r, Err(Error::NonConvex));
    }

    #[test]
    fn construction_rejects_degenerate() {
        assert_eq!(
            ConvexPolygon::new(vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)]),
            Err(Error::TooFewVertices(2))
        );
        assert!(ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
        ])
        .is_err());
        assert_eq!(
            ConvexPolygon::new(vec![Point::new(0.0, f64::NAN), Point::new(1.0, 0.0), Point::new(0.0, 1.0)]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn locate_square_cases() {
        let sq = square2();
        assert_eq!(sq.locate(Point::new(0.0, 0.0)), Location::Interior);
        assert_eq!(sq.locate(Point::new(1.0, 0.0)), Location::Boundary);
        assert_eq!(sq.locate(Point::new(2.0, 0.0)), Location::Exterior);
        assert_eq!(sq.locate(Point::new(1.0, 1.0)), Location::Boundary);
    }

    #[test]
    fn ray_exit_square() {
        let sq = square2();
        let hit = sq
            .ray_boundary_intersection(Point::new(0.0, 0.0), Vec2::new(1.0, 0.0))
            .unwrap();
        assert!((hit - Point::new(1.0, 0.0)).norm() < 1e-12);

        let hit = sq
            .ray_boundary_intersection(Point::new(0.5, 0.0), Vec2::new(1.0, 0.0))
            .unwrap();
        assert!((hit - Point::new(1.0, 0.0)).norm() < 1e-12);

        let hit = sq
            .ray_boundary_intersection(Point::new(0.0, 0.0), Vec2::new(2.0, 1.0))
            .unwrap();
        assert!((hit - Point::new(1.0, 0.5)).norm() < 1e-12);
    }

    #[test]
    fn ray_exit_rejects_bad_input() {
        let sq = square2();
        assert_eq!(
            sq.ray_boundary_intersection(Point::new(1.0, 0.0), Vec2::new(1.0, 0.0)),
            Err(Error::OriginNotInterior)
        );
        assert_eq!(
            sq.ray_boundary_intersection(Point::new(2.0, 0.0), Vec2::new(1.0, 0.0)),
            Err(Error::OriginNotInterior)
        );
        assert_eq!(
            sq.ray_boundary_intersection(Point::new(0.0, 0.0), Vec2::new(0.0, 0.0)),
            Err(Error::ZeroDirection)
        );
    }

    #[test]
    fn chord_through_square() {
        let sq = square2();
        let c = sq.chord_through(Point::new(0.0, 0.0), Point::new(0.5, 0.0)).unwrap();
        assert!((c.first - Point::new(-1.0, 0.0)).norm() < 1e-12);
        assert!((c.second - Point::new(1.0, 0.0)).norm() < 1e-12);

        let c = sq
            .chord_through(Point::new(-0.5, 0.0), Point::new(0.5, 0.0))
            .unwrap();
        assert!((c.first - Point::new(-1.0, 0.0)).norm() < 1e-12);
        assert!((c.second - Point::new(1.0, 0.0)).norm() < 1e-12);

        let c = sq
            .chord_through(Point::new(0.0, 0.0), Point::new(0.25, 0.25))
            .unwrap();
        assert!((c.first - Point::new(-1.0, -1.0)).norm() < 1e-12);
        assert!((c.second - Point::new(1.0, 1.0)).norm() < 1e-12);

        assert_eq!(
            sq.chord_through(Point::new(0.1, 0.2), Point::new(0.1, 0.2)),
            Err(Error::CoincidentPoints)
        );
    }

    #[test]
    fn chord_swap_reverses() {
        let sq = square2();
        let p = Point::new(-0.3, 0.4);
        let q = Point::new(0.6, -0.2);
        let c1 = sq.chord_through(p, q).unwrap();
        let c2 = sq.chord_through(q, p).unwrap();
        assert!((c1.first - c2.second).norm() < 1e-9);
        assert!((c1.second - c2.first).norm() < 1e-9);
    }

    #[test]
    fn hull_examples() {
        let tri = convex_hull(&[
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(0.2, 0.2),
        ])
        .unwrap();
        assert_eq!(tri.len(), 3);

        let sq = convex_hull(&[
            Point::new(1.0, 1.0),
            Point::new(-1.0, 1.0),
            Point::new(1.0, -1.0),
            Point::new(-1.0, -1.0),
        ])
        .unwrap();
        assert_eq!(sq, square2());
        assert_eq!(sq.vertices()[0], Point::new(-1.0, -1.0));

        assert_eq!(
            convex_hull(&[Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(2.0, 0.0)]),
            Err(Error::DegenerateHull)
        );
    }

    #[test]
    fn hull_ignores_permutation_and_duplicates() {
        let base = [
            Point::new(0.0, 0.0),
            Point::new(3.0, 0.1),
            Point::new(2.5, 2.0),
            Point::new(0.5, 2.5),
            Point::new(1.5, 1.0),
        ];
        let h1 = convex_hull(&base).unwrap();
        let mut doubled: Vec<Point> = base.to_vec();
        doubled.extend_from_slice(&base);
        doubled.reverse();
        let h2 = convex_hull(&doubled).unwrap();
        assert_eq!(h1, h2);
    }

    #[test]
    fn centroid_and_area() {
        let sq = square2();
        assert!((sq.area() - 4.0).abs() < 1e-12);
        let c = sq.centroid();
        assert!(c.distance(Point::new(0.0, 0.0)) < 1e-12);
    }
}
