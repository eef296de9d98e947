use thiserror::Error;

/// Errors produced by the geometry kernel.
///
/// Every fallible kernel operation reports one of these; none of the kernel
/// entry points panic on bad geometric input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polygon needs at least 3 vertices after normalization, got {0}")]
    TooFewVertices(usize),
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("polygon is not convex")]
    NonConvex,
    #[error("point is not strictly interior to the domain")]
    OriginNotInterior,
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("all points are collinear or fewer than 3 distinct points")]
    DegenerateHull,
    #[error("point set is empty")]
    EmptyInput,
    #[error("at least {needed} points required, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error("radius must be positive and finite")]
    NonpositiveRadius,
    #[error("center coincides with a domain vertex")]
    VertexCoincidence,
    #[error("duplicate points in input")]
    DuplicatePoints,
}

pub type Result<T> = std::result::Result<T, Error>;
