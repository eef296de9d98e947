//! Declarative scene files: a domain polygon, named polygons and point
//! sets, style options, and an ordered list of construction requests.
//!
//! The format is line oriented and hand-writable. Lines are independent;
//! `#` starts a comment. See the repository README for the full grammar.

mod exec;
mod parse;

pub use exec::{execute, Computed, ExecOptions};
pub use parse::{canonical_text, parse_scene};

use std::collections::BTreeMap;
use std::fmt;

use crate::geom::Point;
use crate::algorithms::MstWeight;
use crate::polygon::ConvexPolygon;

/// Reference to one point of a named point set, written `name` or
/// `name[i]` in scene text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointRef {
    pub set: String,
    pub index: usize,
}

impl fmt::Display for PointRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.index == 0 {
            write!(f, "{}", self.set)
        } else {
            write!(f, "{}[{}]", self.set, self.index)
        }
    }
}

/// Reference to a polygon: the scene domain or a named polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyRef {
    Domain,
    Named(String),
}

impl fmt::Display for PolyRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyRef::Domain => write!(f, "domain"),
            PolyRef::Named(n) => write!(f, "{n}"),
        }
    }
}

/// One construction to perform and render.
#[derive(Debug, Clone, PartialEq)]
pub enum ConstructionRequest {
    Macbeath { at: PointRef },
    FunkBall { center: PointRef, radius: f64 },
    ReverseFunkBall { center: PointRef, radius: f64 },
    HilbertBall { center: PointRef, radius: f64, with_spokes: bool },
    Spokes { at: PointRef },
    Polar { of: PolyRef },
    Minkowski { a: PolyRef, b: PolyRef },
    Union { a: PolyRef, b: PolyRef },
    Intersect { a: PolyRef, b: PolyRef },
    Subtract { a: PolyRef, b: PolyRef },
    Meb { points: String },
    Mst { points: String, weight: MstWeight },
}

impl ConstructionRequest {
    pub fn keyword(&self) -> &'static str {
        match self {
            ConstructionRequest::Macbeath { .. } => "macbeath",
            ConstructionRequest::FunkBall { .. } => "funk_ball",
            ConstructionRequest::ReverseFunkBall { .. } => "reverse_funk_ball",
            ConstructionRequest::HilbertBall { .. } => "hilbert_ball",
            ConstructionRequest::Spokes { .. } => "spokes",
            ConstructionRequest::Polar { .. } => "polar",
            ConstructionRequest::Minkowski { .. } => "minkowski",
            ConstructionRequest::Union { .. } => "union",
            ConstructionRequest::Intersect { .. } => "intersect",
            ConstructionRequest::Subtract { .. } => "subtract",
            ConstructionRequest::Meb { .. } => "meb",
            ConstructionRequest::Mst { .. } => "mst",
        }
    }

    /// True for requests that operate inside the scene domain.
    pub fn needs_domain(&self) -> bool {
        matches!(
            self,
            ConstructionRequest::Macbeath { .. }
                | ConstructionRequest::FunkBall { .. }
                | ConstructionRequest::ReverseFunkBall { .. }
                | ConstructionRequest::HilbertBall { .. }
                | ConstructionRequest::Spokes { .. }
                | ConstructionRequest::Mst { .. }
        )
    }
}

impl fmt::Display for ConstructionRequest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = |x: f64| crate::render::fmt_f64(x, 9, true);
        match self {
            ConstructionRequest::Macbeath { at } => write!(f, "macbeath {at}"),
            ConstructionRequest::FunkBall { center, radius } => {
                write!(f, "funk_ball {center} {}", num(*radius))
            }
            ConstructionRequest::ReverseFunkBall { center, radius } => {
                write!(f, "reverse_funk_ball {center} {}", num(*radius))
            }
            ConstructionRequest::HilbertBall { center, radius, with_spokes } => {
                write!(f, "hilbert_ball {center} {}", num(*radius))?;
                if *with_spokes {
                    write!(f, " spokes")?;
                }
                Ok(())
            }
            ConstructionRequest::Spokes { at } => write!(f, "spokes {at}"),
            ConstructionRequest::Polar { of } => write!(f, "polar {of}"),
            ConstructionRequest::Minkowski { a, b } => write!(f, "minkowski {a} {b}"),
            ConstructionRequest::Union { a, b } => write!(f, "union {a} {b}"),
            ConstructionRequest::Intersect { a, b } => write!(f, "intersect {a} {b}"),
            ConstructionRequest::Subtract { a, b } => write!(f, "subtract {a} {b}"),
            ConstructionRequest::Meb { points } => write!(f, "meb {points}"),
            ConstructionRequest::Mst { points, weight } => {
                write!(f, "mst {points} {}", weight.name())
            }
        }
    }
}

/// Stroke, fill and width settings for one output layer.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerStyle {
    pub stroke: String,
    pub stroke_width: f64,
    pub fill: Option<String>,
    pub fill_opacity: f64,
}

/// Rendering options: a square canvas size in output units plus one
/// [`LayerStyle`] per layer. Defaults are the implementation's own choice of
/// palette, documented in the README.
#[derive(Debug, Clone, PartialEq)]
pub struct StyleOptions {
    pub canvas: f64,
    pub domain: LayerStyle,
    pub input: LayerStyle,
    pub output: LayerStyle,
    pub spokes: LayerStyle,
}

impl Default for StyleOptions {
    fn default() -> Self {
        StyleOptions {
            canvas: 512.0,
            domain: LayerStyle {
                stroke: "black".into(),
                stroke_width: 1.5,
                fill: None,
                fill_opacity: 1.0,
            },
            input: LayerStyle {
                stroke: "dimgray".into(),
                stroke_width: 1.0,
                fill: Some("gainsboro".into()),
                fill_opacity: 0.6,
            },
            output: LayerStyle {
                stroke: "royalblue".into(),
                stroke_width: 1.5,
                fill: Some("lightsteelblue".into()),
                fill_opacity: 0.45,
            },
            spokes: LayerStyle {
                stroke: "seagreen".into(),
                stroke_width: 0.75,
                fill: None,
                fill_opacity: 1.0,
            },
        }
    }
}

/// A parsed and validated scene.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Scene {
    pub domain: Option<ConvexPolygon>,
    pub polygons: BTreeMap<String, ConvexPolygon>,
    pub points: BTreeMap<String, Vec<Point>>,
    pub requests: Vec<ConstructionRequest>,
    pub style: StyleOptions,
    pub translate_centroid: bool,
}

/// Errors from scene parsing and validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SceneError {
    Parse { line: usize, column: usize, message: String },
    Validation { request: String, reason: String },
}

impl fmt::Display for SceneError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SceneError::Parse { line, column, message } => {
                write!(f, "parse error at line {line}, column {column}: {message}")
            }
            SceneError::Validation { request, reason } => {
                write!(f, "invalid request `{request}`: {reason}")
            }
        }
    }
}

impl std::error::Error for SceneError {}

impl Scene {
    /// Resolve a point reference.
    pub fn point(&self, r: &PointRef) -> Option<Point> {
        self.points.get(&r.set).and_then(|v| v.get(r.index)).copied()
    }

    /// Resolve a polygon reference.
    pub fn polygon(&self, r: &PolyRef) -> Option<&ConvexPolygon> {
        match r {
            PolyRef::Domain => self.domain.as_ref(),
            PolyRef::Named(n) => self.polygons.get(n),
        }
    }

    /// Static validation: every referenced name resolves, domain-dependent
    /// requests have a domain and strictly interior points, radii are
    /// positive, point-set arities fit.
    pub fn validate(&self) -> Result<(), SceneError> {
        for req in &self.requests {
            self.validate_request(req)?;
        }
        Ok(())
    }

    fn validate_request(&self, req: &ConstructionRequest) -> Result<(), SceneError> {
        let fail = |reason: String| {
            Err(SceneError::Validation {
                request: req.to_string(),
                reason,
            })
        };
        if req.needs_domain() && self.domain.is_none() {
            return fail("the scene declares no domain".into());
        }

        let check_point = |r: &PointRef| -> Result<Point, SceneError> {
            match self.point(r) {
                Some(p) => Ok(p),
                None => Err(SceneError::Validation {
                    request: req.to_string(),
                    reason: format!("unknown point `{r}`"),
                }),
            }
        };
        let check_interior = |p: Point, name: &dyn fmt::Display| -> Result<(), SceneError> {
            let domain = self.domain.as_ref().expect("checked above");
            if domain.contains_interior(p) {
                Ok(())
            } else {
                Err(SceneError::Validation {
                    request: req.to_string(),
                    reason: format!("point `{name}` is not strictly inside the domain"),
                })
            }
        };
        let check_poly = |r: &PolyRef| -> Result<(), SceneError> {
            if self.polygon(r).is_some() {
                Ok(())
            } else {
                Err(SceneError::Validation {
                    request: req.to_string(),
                    reason: match r {
                        PolyRef::Domain => "the scene declares no domain".into(),
                        PolyRef::Named(n) => format!("unknown polygon `{n}`"),
                    },
                })
            }
        };
        let check_radius = |radius: f64| -> Result<(), SceneError> {
            if radius.is_finite() && radius > 0.0 {
                Ok(())
            } else {
                Err(SceneError::Validation {
                    request: req.to_string(),
                    reason: "radius must be positive and finite".into(),
                })
            }
        };

        match req {
            ConstructionRequest::Macbeath { at } | ConstructionRequest::Spokes { at } => {
                let p = check_point(at)?;
                check_interior(p, at)?;
            }
            ConstructionRequest::FunkBall { center, radius }
            | ConstructionRequest::ReverseFunkBall { center, radius }
            | ConstructionRequest::HilbertBall { center, radius, .. } => {
                let p = check_point(center)?;
                check_interior(p, center)?;
                check_radius(*radius)?;
            }
            ConstructionRequest::Polar { of } => {
                check_poly(of)?;
            }
            ConstructionRequest::Minkowski { a, b }
            | ConstructionRequest::Union { a, b }
            | ConstructionRequest::Intersect { a, b }
            | ConstructionRequest::Subtract { a, b } => {
                check_poly(a)?;
                check_poly(b)?;
            }
            ConstructionRequest::Meb { points } => {
                let Some(set) = self.points.get(points) else {
                    return fail(format!("unknown point set `{points}`"));
                };
                if set.is_empty() {
                    return fail(format!("point set `{points}` is empty"));
                }
            }
            ConstructionRequest::Mst { points, .. } => {
                let Some(set) = self.points.get(points) else {
                    return fail(format!("unknown point set `{points}`"));
                };
                if set.len() < 2 {
                    return fail(format!("point set `{points}` needs at least 2 points"));
                }
                for (k, p) in set.iter().enumerate() {
                    check_interior(*p, &format!("{points}[{k}]"))?;
                }
                for i in 0..set.len() {
                    for j in (i + 1)..set.len() {
                        if (set[i] - set[j]).norm() <= crate::geom::EPS {
                            return fail(format!(
                                "point set `{points}` has duplicate points at {i} and {j}"
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
