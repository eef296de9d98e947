//! Point-set algorithms: Euclidean minimum enclosing ball and metric
//! minimum spanning trees.

mod meb;
mod mst;

pub use meb::{min_enclosing_ball, min_enclosing_ball_seeded, Circle};
pub use mst::{metric_mst, MstWeight, Tree, TreeEdge};
