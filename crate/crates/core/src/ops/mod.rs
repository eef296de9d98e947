//! Set-theoretic and dual constructions on convex polygons.

mod boolean;
mod macbeath;
mod minkowski;
mod polar;
mod region;

pub use boolean::{intersect, subtract, union};
pub use macbeath::macbeath_region;
pub use minkowski::minkowski_sum;
pub use polar::polar_dual;
pub use region::{Region, Ring, RingKind};
