//! Binding construction requests to kernel operations.

use crate::algorithms::{metric_mst, min_enclosing_ball_seeded, Circle, Tree};
use crate::error::Error;
use crate::geom::{Chord, Point, Vec2};
use crate::metrics::{funk_ball, hilbert_ball, reverse_funk_ball, spokes, Ball};
use crate::ops::{intersect, macbeath_region, minkowski_sum, polar_dual, subtract, union, Region};
use crate::polygon::ConvexPolygon;
use crate::scene::{ConstructionRequest, Scene, SceneError};

/// Result of one construction request, aligned 1:1 with `scene.requests`.
#[derive(Debug, Clone, PartialEq)]
pub enum Computed {
    Polygon(ConvexPolygon),
    /// An `intersect` request whose operands do not overlap.
    EmptyIntersection,
    Region(Region),
    Ball(Ball),
    Circle(Circle),
    Tree { points: Vec<Point>, tree: Tree },
    Spokes(Vec<Chord>),
    Polar { dual: ConvexPolygon, recentered: Option<Vec2> },
}

/// Per-run execution options.
#[derive(Debug, Clone, Copy)]
#[derive(Default)]
pub struct ExecOptions {
    /// Seed for the minimum-enclosing-ball shuffle.
    pub seed: u64,
    /// Translate polygons to their centroid before polar duality; combined
    /// (or) with the scene's own `option translate_centroid`.
    pub translate_centroid: bool,
}


/// Run every request in order. Kernel precondition failures surface as
/// [`SceneError::Validation`] naming the request; nothing panics.
pub fn execute(scene: &Scene, opts: &ExecOptions) -> Result<Vec<Computed>, SceneError> {
    scene.requests.iter().map(|req| run_request(scene, opts, req)).collect()
}

fn run_request(
    scene: &Scene,
    opts: &ExecOptions,
    req: &ConstructionRequest,
) -> Result<Computed, SceneError> {
    let fail = |reason: String| SceneError::Validation { request: req.to_string(), reason };
    let kernel = |e: Error| SceneError::Validation { request: req.to_string(), reason: e.to_string() };

    let domain = || -> Result<&ConvexPolygon, SceneError> {
        scene.domain.as_ref().ok_or_else(|| fail("the scene declares no domain".into()))
    };
    let point = |r: &crate::scene::PointRef| -> Result<Point, SceneError> {
        scene.point(r).ok_or_else(|| fail(format!("unknown point `{r}`")))
    };
    let poly = |r: &crate::scene::PolyRef| -> Result<&ConvexPolygon, SceneError> {
        scene.polygon(r).ok_or_else(|| fail(format!("unknown polygon `{r}`")))
    };
    let point_set = |name: &str| -> Result<&Vec<Point>, SceneError> {
        scene.points.get(name).ok_or_else(|| fail(format!("unknown point set `{name}`")))
    };

    Ok(match req {
        ConstructionRequest::Macbeath { at } => {
            Computed::Polygon(macbeath_region(domain()?, point(at)?).map_err(kernel)?)
        }
        ConstructionRequest::FunkBall { center, radius } => {
            Computed::Ball(funk_ball(domain()?, point(center)?, *radius).map_err(kernel)?)
        }
        ConstructionRequest::ReverseFunkBall { center, radius } => {
            Computed::Ball(reverse_funk_ball(domain()?, point(center)?, *radius).map_err(kernel)?)
        }
        ConstructionRequest::HilbertBall { center, radius, with_spokes } => Computed::Ball(
            hilbert_ball(domain()?, point(center)?, *radius, *with_spokes).map_err(kernel)?,
        ),
        ConstructionRequest::Spokes { at } => {
            Computed::Spokes(spokes(domain()?, point(at)?).map_err(kernel)?)
        }
        ConstructionRequest::Polar { of } => {
            let target = poly(of)?;
            if opts.translate_centroid || scene.translate_centroid {
                let c = target.centroid();
                let shift = Vec2::new(-c.x, -c.y);
                let dual = polar_dual(&target.translated(shift)).map_err(kernel)?;
                Computed::Polar { dual, recentered: Some(shift) }
            } else {
                Computed::Polar { dual: polar_dual(target).map_err(kernel)?, recentered: None }
            }
        }
        ConstructionRequest::Minkowski { a, b } => {
            Computed::Polygon(minkowski_sum(poly(a)?, poly(b)?))
        }
        ConstructionRequest::Union { a, b } => Computed::Region(union(poly(a)?, poly(b)?)),
        ConstructionRequest::Intersect { a, b } => match intersect(poly(a)?, poly(b)?) {
            Some(p) => Computed::Polygon(p),
            None => Computed::EmptyIntersection,
        },
        ConstructionRequest::Subtract { a, b } => Computed::Region(subtract(poly(a)?, poly(b)?)),
        ConstructionRequest::Meb { points } => {
            Computed::Circle(min_enclosing_ball_seeded(point_set(points)?, opts.seed).map_err(kernel)?)
        }
        ConstructionRequest::Mst { points, weight } => {
            let pts = point_set(points)?.clone();
            let tree = metric_mst(domain()?, &pts, *weight).map_err(kernel)?;
            Computed::Tree { points: pts, tree }
        }
    })
}
