//! Boolean operations on convex polygons.
//!
//! `intersect` goes through the half-plane machinery (the intersection of
//! convex sets is convex). `union` exploits that the union of two
//! overlapping convex sets is star-shaped about any interior point of their
//! intersection, so its single ring can be assembled by sorting boundary
//! material radially. `subtract` traces the two boundaries through their
//! crossing points. Contacts of measure zero count as non-overlapping
//! throughout: a shared edge or corner yields an empty intersection and a
//! two-ring union.

use crate::geom::{Location, Point, EPS};
use crate::halfplane::{halfplane_intersection, HalfPlane, HalfPlaneIntersection};
use crate::ops::region::{Region, Ring, RingKind};
use crate::polygon::ConvexPolygon;

/// Convex intersection, `None` when the interiors are disjoint or the
/// overlap has measure zero.
pub fn intersect(a: &ConvexPolygon, b: &ConvexPolygon) -> Option<ConvexPolygon> {
    let mut planes = a.halfplanes();
    planes.extend(b.halfplanes());
    match halfplane_intersection(&planes) {
        HalfPlaneIntersection::Bounded(p) => Some(p),
        _ => None,
    }
}

/// Clip a convex polygon to a single closed half-plane; `None` when nothing
/// of positive measure remains.
pub(crate) fn clip_halfplane(poly: &ConvexPolygon, hp: &HalfPlane) -> Option<ConvexPolygon> {
    let n = hp.normal().norm();
    if n <= EPS * EPS {
        return if hp.c >= 0.0 { Some(poly.clone()) } else { None };
    }
    let hp = HalfPlane::new(hp.a / n, hp.b / n, hp.c / n);

    let verts = poly.vertices();
    let m = verts.len();
    let mut out: Vec<Point> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let cur = verts[i];
        let next = verts[(i + 1) % m];
        let sc = hp.slack(cur);
        let sn = hp.slack(next);
        if sc >= -EPS {
            out.push(cur);
        }
        if (sc > EPS && sn < -EPS) || (sc < -EPS && sn > EPS) {
            let t = sc / (sc - sn);
            out.push(cur + (next - cur) * t);
        }
    }
    ConvexPolygon::new(out).ok()
}

/// Union of two convex polygons: one outer ring when the closures overlap
/// with positive area, two outer rings otherwise; never holed.
pub fn union(a: &ConvexPolygon, b: &ConvexPolygon) -> Region {
    let overlap = match intersect(a, b) {
        Some(x) => x,
        None => {
            return Region::new(vec![
                Ring::new(a.vertices().to_vec(), RingKind::Outer),
                Ring::new(b.vertices().to_vec(), RingKind::Outer),
            ]);
        }
    };
    let tol = containment_tolerance(a, b);
    if overlap.area() >= a.area() - tol {
        return Region::from_polygon(b);
    }
    if overlap.area() >= b.area() - tol {
        return Region::from_polygon(a);
    }

    // The union is star-shaped about any interior point of the overlap, and
    // no boundary segment of the union is radially aligned with it, so the
    // ring is exactly the boundary material sorted by angle: vertices of
    // either polygon not interior to the other, plus all boundary crossings.
    let center = overlap.centroid();
    let mut pts: Vec<Point> = Vec::with_capacity(a.len() + b.len());
    pts.extend(a.vertices().iter().filter(|v| b.locate(**v) != Location::Interior));
    pts.extend(b.vertices().iter().filter(|v| a.locate(**v) != Location::Interior));
    pts.extend(raw_crossings(a, b).iter().map(|c| c.pt));
    pts.sort_by(|p, q| {
        let ap = (*p - center).angle();
        let aq = (*q - center).angle();
        ap.partial_cmp(&aq).unwrap()
    });
    match finish_ring(pts, RingKind::Outer) {
        Some(ring) => Region::new(vec![ring]),
        None => {
            debug_assert!(false, "union: degenerate ring for partial overlap");
            Region::from_polygon(if a.area() >= b.area() { a } else { b })
        }
    }
}

/// Closure of the set difference `a \ b`: possibly empty, holed, or split
/// into several components.
pub fn subtract(a: &ConvexPolygon, b: &ConvexPolygon) -> Region {
    let overlap = match intersect(a, b) {
        Some(x) => x,
        None => return Region::from_polygon(a),
    };
    let tol = containment_tolerance(a, b);
    if overlap.area() >= a.area() - tol {
        return Region::empty();
    }
    if overlap.area() >= b.area() - tol {
        return Region::with_hole(a, &overlap);
    }
    match CrossingGraph::build(a, b) {
        Some(graph) => graph.subtract_rings(),
        None => {
            // Positive overlap but no transversal crossings survived: a
            // tangential configuration indistinguishable from containment.
            debug_assert!(false, "subtract: no crossings for partial overlap");
            Region::with_hole(a, &overlap)
        }
    }
}

fn containment_tolerance(a: &ConvexPolygon, b: &ConvexPolygon) -> f64 {
    1e-10 * a.area().min(b.area()).max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Inside,
    Outside,
}

#[derive(Debug, Clone)]
struct Arc {
    start: usize,
    end: usize,
    /// Polyline from the start crossing (inclusive) up to, but excluding,
    /// the end crossing.
    pts: Vec<Point>,
    side: Side,
}

/// The two boundaries cut at their mutual crossing points.
struct CrossingGraph {
    a_arcs: Vec<Arc>,
    b_arcs: Vec<Arc>,
}

impl CrossingGraph {
    /// Find transversal boundary crossings, prune tangential touches (no
    /// side flip along either boundary), and split both boundaries into
    /// arcs. `None` when no proper crossing survives.
    fn build(a: &ConvexPolygon, b: &ConvexPolygon) -> Option<CrossingGraph> {
        let mut crossings = raw_crossings(a, b);
        loop {
            if crossings.len() < 2 {
                return None;
            }
            let a_arcs = split_arcs(a, b, &crossings, |c| c.u_a);
            let b_arcs = split_arcs(b, a, &crossings, |c| c.u_b);
            let mut keep = vec![false; crossings.len()];
            mark_flips(&a_arcs, &mut keep);
            mark_flips(&b_arcs, &mut keep);
            if keep.iter().all(|&k| k) {
                return Some(CrossingGraph { a_arcs, b_arcs });
            }
            crossings = crossings
                .into_iter()
                .enumerate()
                .filter(|(i, _)| keep[*i])
                .map(|(_, c)| c)
                .collect();
        }
    }

    /// Components of `a \ b`: outside arcs of `a` walked forward joined by
    /// inside arcs of `b` walked backward.
    fn subtract_rings(&self) -> Region {
        let a_start = arcs_starting_at(&self.a_arcs);
        let b_end = arcs_ending_at(&self.b_arcs);
        let mut used_a = vec![false; self.a_arcs.len()];
        let mut rings = Vec::new();

        for seed in 0..self.a_arcs.len() {
            if used_a[seed] || self.a_arcs[seed].side != Side::Outside {
                continue;
            }
            let mut pts: Vec<Point> = Vec::new();
            let origin = self.a_arcs[seed].start;
            let mut idx = seed;
            let budget = self.a_arcs.len() + self.b_arcs.len() + 1;
            let mut closed = false;
            for _ in 0..budget {
                let arc = &self.a_arcs[idx];
                used_a[idx] = true;
                pts.extend_from_slice(&arc.pts);
                let entry = arc.end;
                if entry == origin {
                    closed = true;
                    break;
                }
                // Walk the b-arc arriving at this crossing in reverse; it
                // bounds the difference from the inside.
                let Some(bi) = b_end[entry] else {
                    debug_assert!(false, "subtract: dangling crossing {entry}");
                    break;
                };
                let barc = &self.b_arcs[bi];
                debug_assert_eq!(barc.side, Side::Inside);
                pts.push(self.crossing_point(entry));
                let mut back = barc.pts.clone();
                back.reverse();
                let interior_count = barc.pts.len().saturating_sub(1);
                pts.extend(back.into_iter().take(interior_count));
                let exit = barc.start;
                if exit == origin {
                    closed = true;
                    break;
                }
                match a_start[exit] {
                    Some(i) => idx = i,
                    None => {
                        debug_assert!(false, "subtract: dangling crossing {exit}");
                        break;
                    }
                }
            }
            debug_assert!(closed, "subtract: open ring");
            if let Some(ring) = finish_ring(pts, RingKind::Outer) {
                rings.push(ring);
            }
        }
        Region::new(rings)
    }

    fn crossing_point(&self, id: usize) -> Point {
        for arc in self.a_arcs.iter().chain(&self.b_arcs) {
            if arc.start == id {
                return arc.pts[0];
            }
        }
        unreachable!("crossing {id} not found")
    }
}

fn arcs_starting_at(arcs: &[Arc]) -> Vec<Option<usize>> {
    let max = arcs.iter().map(|a| a.start.max(a.end)).max().unwrap_or(0);
    let mut map = vec![None; max + 1];
    for (i, arc) in arcs.iter().enumerate() {
        map[arc.start] = Some(i);
    }
    map
}

fn arcs_ending_at(arcs: &[Arc]) -> Vec<Option<usize>> {
    let max = arcs.iter().map(|a| a.start.max(a.end)).max().unwrap_or(0);
    let mut map = vec![None; max + 1];
    for (i, arc) in arcs.iter().enumerate() {
        map[arc.end] = Some(i);
    }
    map
}

#[derive(Debug, Clone, Copy)]
struct Crossing {
    pt: Point,
    /// Perimeter coordinate on `a`: edge index plus fractional position.
    u_a: f64,
    u_b: f64,
}

/// Transversal intersections between the boundaries, snapped to vertices
/// where they pass within [`EPS`], deduplicated within [`EPS`].
fn raw_crossings(a: &ConvexPolygon, b: &ConvexPolygon) -> Vec<Crossing> {
    let mut out: Vec<Crossing> = Vec::new();
    for (i, (p1, p2)) in a.edges().enumerate() {
        let ea = p2 - p1;
        let len_a = ea.norm();
        for (j, (q1, q2)) in b.edges().enumerate() {
            let eb = q2 - q1;
            let len_b = eb.norm();
            let denom = ea.cross(eb);
            if denom.abs() <= 1e-14 * len_a * len_b {
                continue; // parallel: overlaps surface through vertex events
            }
            let s = (q1 - p1).cross(eb) / denom;
            let t = (q1 - p1).cross(ea) / denom;
            let snap_a = EPS / len_a;
            let snap_b = EPS / len_b;
            if s < -snap_a || s > 1.0 + snap_a || t < -snap_b || t > 1.0 + snap_b {
                continue;
            }
            let s = snap_param(s, snap_a);
            let pt = p1 + ea * s;
            let t = snap_param((pt - q1).dot(eb) / (len_b * len_b), snap_b);
            let u_a = i as f64 + s;
            let u_b = j as f64 + t;
            if !out.iter().any(|c| (c.pt - pt).norm() <= EPS) {
                out.push(Crossing { pt, u_a, u_b });
            }
        }
    }
    out
}

fn snap_param(s: f64, snap: f64) -> f64 {
    if s <= snap {
        0.0
    } else if s >= 1.0 - snap {
        1.0
    } else {
        s
    }
}

/// Cut the boundary of `poly` at the crossings and classify every arc
/// against `other`.
fn split_arcs(
    poly: &ConvexPolygon,
    other: &ConvexPolygon,
    crossings: &[Crossing],
    coord: impl Fn(&Crossing) -> f64,
) -> Vec<Arc> {
    let n = poly.len() as f64;
    // (perimeter coordinate, crossing id if any, point)
    let mut events: Vec<(f64, Option<usize>, Point)> = Vec::new();
    for (i, v) in poly.vertices().iter().enumerate() {
        events.push((i as f64, None, *v));
    }
    for (id, c) in crossings.iter().enumerate() {
        let mut u = coord(c);
        if u >= n {
            u -= n;
        }
        events.push((u, Some(id), c.pt));
    }
    events.sort_by(|l, r| l.0.partial_cmp(&r.0).unwrap());

    // Merge crossings sitting exactly on a vertex into a single node,
    // keeping the crossing point so both boundaries share coordinates.
    let mut nodes: Vec<(Option<usize>, Point)> = Vec::new();
    for (_, id, pt) in events {
        match nodes.last_mut() {
            Some(last) if (last.1 - pt).norm() <= EPS => {
                if last.0.is_none() {
                    *last = (id, pt);
                }
            }
            _ => nodes.push((id, pt)),
        }
    }
    // The seam between the list tail and head can also coincide.
    if nodes.len() >= 2 {
        let first = nodes[0];
        let last = *nodes.last().unwrap();
        if (first.1 - last.1).norm() <= EPS {
            nodes.pop();
            let id = first.0.or(last.0);
            let pt = if first.0.is_some() { first.1 } else { last.1 };
            nodes[0] = (id, pt);
        }
    }

    let cross_positions: Vec<usize> = nodes
        .iter()
        .enumerate()
        .filter_map(|(i, (id, _))| id.map(|_| i))
        .collect();
    let mut arcs = Vec::with_capacity(cross_positions.len());
    let total = nodes.len();
    for (k, &pos) in cross_positions.iter().enumerate() {
        let next_pos = cross_positions[(k + 1) % cross_positions.len()];
        let mut pts = Vec::new();
        let mut i = pos;
        loop {
            pts.push(nodes[i].1);
            i = (i + 1) % total;
            if i == next_pos {
                break;
            }
        }
        let end_pt = nodes[next_pos].1;
        let side = classify_arc(&pts, end_pt, other);
        arcs.push(Arc {
            start: nodes[pos].0.unwrap(),
            end: nodes[next_pos].0.unwrap(),
            pts,
            side,
        });
    }
    arcs
}

/// Side of an arc relative to `other`, decided at the sample point with the
/// largest classification margin so near-boundary noise cannot flip it.
/// Arcs running along the other boundary (margin within [`EPS`] of zero
/// everywhere) count as inside: the shared boundary belongs to the overlap.
fn classify_arc(pts: &[Point], end_pt: Point, other: &ConvexPolygon) -> Side {
    let mut best_margin = 0.0_f64;
    for k in 0..pts.len() {
        let p = pts[k];
        let q = if k + 1 < pts.len() { pts[k + 1] } else { end_pt };
        let mid = Point::new((p.x + q.x) / 2.0, (p.y + q.y) / 2.0);
        let m = other.boundary_margin(mid);
        if m.abs() > best_margin.abs() {
            best_margin = m;
        }
    }
    if best_margin < -EPS {
        Side::Outside
    } else {
        Side::Inside
    }
}

/// Record which crossings flip the side of consecutive arcs; crossings that
/// flip along neither boundary are tangential touches and get pruned.
fn mark_flips(arcs: &[Arc], keep: &mut [bool]) {
    for arc in arcs {
        for prev in arcs {
            if prev.end == arc.start && prev.side != arc.side {
                keep[arc.start] = true;
            }
        }
    }
}

fn finish_ring(mut pts: Vec<Point>, kind: RingKind) -> Option<Ring> {
    pts.dedup_by(|p, q| (*p - *q).norm() <= EPS);
    while pts.len() >= 2 && (pts[0] - *pts.last().unwrap()).norm() <= EPS {
        pts.pop();
    }
    if pts.len() < 3 {
        return None;
    }
    let n = pts.len();
    let mut area = 0.0;
    for i in 0..n {
        let p = pts[i];
        let q = pts[(i + 1) % n];
        area += p.x * q.y - q.x * p.y;
    }
    area /= 2.0;
    if area.abs() <= 1e-12 {
        return None;
    }
    let want_ccw = kind == RingKind::Outer;
    if (area > 0.0) != want_ccw {
        debug_assert!(false, "ring traced with unexpected orientation");
        pts.reverse();
    }
    Some(Ring::new(pts, kind))
}
