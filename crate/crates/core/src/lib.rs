pub mod algorithms;
pub mod error;
pub mod geom;
pub mod halfplane;
pub mod metrics;
pub mod ops;
pub mod polygon;
pub mod random;
pub mod render;
pub mod scene;

pub use algorithms::{metric_mst, min_enclosing_ball, min_enclosing_ball_seeded, Circle, MstWeight, Tree, TreeEdge};
pub use error::{Error, Result};
pub use geom::{orientation, Chord, Location, Orientation, Point, Vec2, EPS};
pub use halfplane::{halfplane_intersection, HalfPlane, HalfPlaneIntersection};
pub use metrics::{distance, funk_ball, funk_distance, hilbert_ball, hilbert_distance, reverse_funk_ball, reverse_funk_distance, spokes, Ball, MetricKind};
pub use ops::{intersect, macbeath_region, minkowski_sum, polar_dual, subtract, union, Region, Ring, RingKind};
pub use polygon::{convex_hull, ConvexPolygon};
pub use render::{emit_ipe, emit_svg};
pub use scene::{execute, parse_scene, Computed, ConstructionRequest, ExecOptions, Scene, SceneError};
