//! Polygonal regions with holes: the output type of union and subtraction.

use crate::geom::Point;
use crate::polygon::ConvexPolygon;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind {
    Outer,
    Hole,
}

/// A closed ring of a region boundary. Outer rings wind counterclockwise,
/// holes clockwise, so the signed area of a ring carries its kind's sign.
#[derive(Debug, Clone, PartialEq)]
pub struct Ring {
    points: Vec<Point>,
    kind: RingKind,
}

impl Ring {
    pub fn new(points: Vec<Point>, kind: RingKind) -> Self {
        let ring = Ring { points, kind };
        debug_assert!(ring.points.len() >= 3);
        debug_assert!(match kind {
            RingKind::Outer => ring.signed_area() > 0.0,
            RingKind::Hole => ring.signed_area() < 0.0,
        });
        ring
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn signed_area(&self) -> f64 {
        let n = self.points.len();
        let mut acc = 0.0;
        for i in 0..n {
            let p = self.points[i];
            let q = self.points[(i + 1) % n];
            acc += p.x * q.y - q.x * p.y;
        }
        acc / 2.0
    }
}

/// A set of disjoint oriented rings: outer boundaries plus holes. May be
/// empty, disconnected, or holed; the empty region has no rings.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Region {
    rings: Vec<Ring>,
}

impl Region {
    pub fn empty() -> Self {
        Region { rings: Vec::new() }
    }

    pub fn new(rings: Vec<Ring>) -> Self {
        Region { rings }
    }

    pub fn from_polygon(poly: &ConvexPolygon) -> Self {
        Region {
            rings: vec![Ring::new(poly.vertices().to_vec(), RingKind::Outer)],
        }
    }

    /// Outer ring plus one hole strictly inside it.
    pub fn with_hole(outer: &ConvexPolygon, hole: &ConvexPolygon) -> Self {
        let mut hole_pts = hole.vertices().to_vec();
        hole_pts.reverse();
        Region {
            rings: vec![
                Ring::new(outer.vertices().to_vec(), RingKind::Outer),
                Ring::new(hole_pts, RingKind::Hole),
            ],
        }
    }

    pub fn rings(&self) -> &[Ring] {
        &self.rings
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
    }

    pub fn outer_count(&self) -> usize {
        self.rings.iter().filter(|r| r.kind() == RingKind::Outer).count()
    }

    pub fn hole_count(&self) -> usize {
        self.rings.iter().filter(|r| r.kind() == RingKind::Hole).count()
    }

    /// Total area: outer rings contribute positively, holes negatively.
    pub fn area(&self) -> f64 {
        self.rings.iter().map(|r| r.signed_area()).sum()
    }
}
