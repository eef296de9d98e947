//! Deterministic random inputs at figure scale: convex polygons and
//! interior sample points. Used by the test suites and benchmarks; handy
//! for generating scenes too.

use rand::Rng;

use crate::geom::{Point, Vec2};
use crate::polygon::ConvexPolygon;

/// Random convex polygon with about `n` vertices (near-collinear chains can
/// merge a few away), bounding box centered at the origin, diameter of
/// order `scale`. Valtr's construction: random coordinate multisets are
/// split into opposing chains whose differences, paired up and sorted by
/// angle, walk a closed convex ring.
pub fn convex_polygon<R: Rng + ?Sized>(rng: &mut R, n: usize, scale: f64) -> ConvexPolygon {
    assert!(n >= 3);
    loop {
        let xs = chain_deltas(rng, n, scale);
        let mut ys = chain_deltas(rng, n, scale);
        // Random pairing of x- and y-deltas.
        for i in (1..ys.len()).rev() {
            ys.swap(i, rng.gen_range(0..=i));
        }
        let mut vectors: Vec<Vec2> = xs
            .into_iter()
            .zip(ys)
            .map(|(x, y)| Vec2::new(x, y))
            .collect();
        vectors.sort_by(|a, b| a.angle().partial_cmp(&b.angle()).unwrap());

        let mut p = Point::new(0.0, 0.0);
        let mut verts = Vec::with_capacity(n);
        for v in &vectors {
            verts.push(p);
            p = p + *v;
        }
        if let Ok(poly) = ConvexPolygon::new(verts) {
            let (min, max) = poly.bounding_box();
            let shift = Vec2::new(-(min.x + max.x) / 2.0, -(min.y + max.y) / 2.0);
            return poly.translated(shift);
        }
        // Degenerate draw (all points nearly collinear); try again.
    }
}

/// Like [`convex_polygon`] but retries until the post-merge vertex count
/// lands in `lo..=hi`.
pub fn convex_polygon_with_vertices<R: Rng + ?Sized>(
    rng: &mut R,
    lo: usize,
    hi: usize,
    scale: f64,
) -> ConvexPolygon {
    loop {
        let n = rng.gen_range(lo..=hi);
        let poly = convex_polygon(rng, n, scale);
        if (lo..=hi).contains(&poly.len()) {
            return poly;
        }
    }
}

/// Uniform point of `poly` at least `margin` inside the boundary, by
/// rejection from the bounding box. Falls back to the centroid when the
/// margin leaves almost nothing to hit.
pub fn interior_point<R: Rng + ?Sized>(rng: &mut R, poly: &ConvexPolygon, margin: f64) -> Point {
    let (min, max) = poly.bounding_box();
    for _ in 0..10_000 {
        let p = Point::new(
            rng.gen_range(min.x..=max.x),
            rng.gen_range(min.y..=max.y),
        );
        if poly.boundary_margin(p) > margin {
            return p;
        }
    }
    poly.centroid()
}

fn chain_deltas<R: Rng + ?Sized>(rng: &mut R, n: usize, scale: f64) -> Vec<f64> {
    let mut coords: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..scale)).collect();
    coords.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let first = coords[0];
    let last = coords[n - 1];

    let mut up = vec![first];
    let mut down = vec![first];
    for &c in &coords[1..n - 1] {
        if rng.gen_bool(0.5) {
            up.push(c);
        } else {
            down.push(c);
        }
    }
    up.push(last);
    down.push(last);

    let mut deltas = Vec::with_capacity(n);
    for w in up.windows(2) {
        deltas.push(w[1] - w[0]);
    }
    for w in down.windows(2) {
        deltas.push(w[0] - w[1]);
    }
    deltas
}
