//! Shared input builders for the kernel benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hilbert_kit::random::{convex_polygon, interior_point};
use hilbert_kit::{ConvexPolygon, Point};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn domain(n: usize) -> ConvexPolygon {
    convex_polygon(&mut rng(42), n, 10.0)
}

pub fn interior_points(poly: &ConvexPolygon, count: usize) -> Vec<Point> {
    let mut r = rng(7);
    (0..count).map(|_| interior_point(&mut r, poly, 1e-3)).collect()
}
