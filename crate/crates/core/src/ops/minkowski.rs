//! Minkowski sums of convex polygons.

use crate::geom::Point;
use crate::polygon::ConvexPolygon;

/// The Minkowski sum `{a + b : a in omega, b in psi}` by the edge-vector
/// merge: both boundaries are walked simultaneously in angle order, so the
/// sum costs O(m + n) and has at most m + n vertices after collinear merge.
pub fn minkowski_sum(omega: &ConvexPolygon, psi: &ConvexPolygon) -> ConvexPolygon {
    let p = reorder_lowest_first(omega.vertices());
    let q = reorder_lowest_first(psi.vertices());
    let (np, nq) = (p.len(), q.len());

    let mut out: Vec<Point> = Vec::with_capacity(np + nq);
    let (mut i, mut j) = (0usize, 0usize);
    while i < np || j < nq {
        out.push(Point::new(p[i % np].x + q[j % nq].x, p[i % np].y + q[j % nq].y));
        let ep = p[(i + 1) % np] - p[i % np];
        let eq = q[(j + 1) % nq] - q[j % nq];
        let cross = ep.cross(eq);
        if cross >= 0.0 && i < np {
            i += 1;
        }
        if cross <= 0.0 && j < nq {
            j += 1;
        }
    }
    ConvexPolygon::new(out).expect("sum of convex polygons is convex")
}

/// Rotate the CCW ring so the lowest vertex (then leftmost) comes first.
fn reorder_lowest_first(verts: &[Point]) -> Vec<Point> {
    let mut lowest = 0;
    for k in 1..verts.len() {
        let (v, b) = (verts[k], verts[lowest]);
        if v.y < b.y || (v.y == b.y && v.x < b.x) {
            lowest = k;
        }
    }
    let mut out = verts.to_vec();
    out.rotate_left(lowest);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::convex_hull;

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn square_plus_square_doubles() {
        let sq = unit_square();
        let sum = minkowski_sum(&sq, &sq);
        assert_eq!(sum.len(), 4);
        assert!((sum.area() - 4.0).abs() < 1e-12);
        let (min, max) = sum.bounding_box();
        assert_eq!((min.x, min.y, max.x, max.y), (0.0, 0.0, 2.0, 2.0));
    }

    #[test]
    fn triangle_plus_square_is_pentagon() {
        let tri = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        let sum = minkowski_sum(&tri, &unit_square());
        let want = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(2.0, 1.0),
            Point::new(1.0, 2.0),
            Point::new(0.0, 2.0),
        ])
        .unwrap();
        assert_eq!(sum, want);
    }

    #[test]
    fn matches_hull_of_pairwise_sums_and_commutes() {
        let a = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.4),
            Point::new(2.4, 1.9),
            Point::new(0.9, 2.8),
            Point::new(-0.6, 1.2),
        ])
        .unwrap();
        let b = ConvexPolygon::new(vec![
            Point::new(0.0, -1.0),
            Point::new(1.2, -0.2),
            Point::new(0.4, 1.1),
            Point::new(-0.8, 0.3),
        ])
        .unwrap();
        let sum = minkowski_sum(&a, &b);
        let swapped = minkowski_sum(&b, &a);
        assert_eq!(sum, swapped);

        let mut pts = Vec::new();
        for u in a.vertices() {
            for v in b.vertices() {
                pts.push(Point::new(u.x + v.x, u.y + v.y));
            }
        }
        let oracle = convex_hull(&pts).unwrap();
        assert_eq!(sum.len(), oracle.len());
        for (u, v) in sum.vertices().iter().zip(oracle.vertices()) {
            assert!((*u - *v).norm() < 1e-9);
        }
    }
}
