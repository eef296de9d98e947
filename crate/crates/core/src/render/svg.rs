//! Standalone SVG 1.1 output.
//!
//! Kernel coordinates are y-up while SVG is y-down; all geometry is written
//! with raw kernel coordinates inside a single root group whose transform
//! performs the documented flip and scaling, so path data can be read back
//! as kernel values directly. Stroke widths are divided by the scale to
//! stay constant on screen. Output is byte-deterministic.

use std::fmt::Write;

use crate::geom::{Chord, Point};
use crate::ops::Region;
use crate::polygon::ConvexPolygon;
use crate::render::{drawing_bounds, fmt_f64, xml_escape};
use crate::scene::{Computed, LayerStyle, Scene};

struct SvgCtx {
    scale: f64,
}

impl SvgCtx {
    fn n(&self, v: f64) -> String {
        fmt_f64(v, 9, true)
    }

    fn stroke_width(&self, layer: &LayerStyle) -> String {
        fmt_f64(layer.stroke_width / self.scale, 9, true)
    }

    fn paint_attrs(&self, layer: &LayerStyle, filled: bool) -> String {
        let mut s = String::new();
        match (&layer.fill, filled) {
            (Some(fill), true) => {
                write!(
                    s,
                    " fill=\"{}\" fill-opacity=\"{}\"",
                    xml_escape(fill),
                    fmt_f64(layer.fill_opacity, 9, true)
                )
                .unwrap();
            }
            _ => s.push_str(" fill=\"none\""),
        }
        write!(
            s,
            " stroke=\"{}\" stroke-width=\"{}\"",
            xml_escape(&layer.stroke),
            self.stroke_width(layer)
        )
        .unwrap();
        s
    }

    fn polygon_path(&self, poly: &ConvexPolygon) -> String {
        self.ring_path(poly.vertices())
    }

    fn ring_path(&self, pts: &[Point]) -> String {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let op = if i == 0 { 'M' } else { 'L' };
            write!(d, "{op} {} {} ", self.n(p.x), self.n(p.y)).unwrap();
        }
        d.push('Z');
        d
    }

    fn region_path(&self, region: &Region) -> String {
        let mut d = String::new();
        for (k, ring) in region.rings().iter().enumerate() {
            if k > 0 {
                d.push(' ');
            }
            d.push_str(&self.ring_path(ring.points()));
        }
        d
    }

    fn line(&self, out: &mut String, a: Point, b: Point, layer: &LayerStyle) {
        writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{}\"/>",
            self.n(a.x),
            self.n(a.y),
            self.n(b.x),
            self.n(b.y),
            xml_escape(&layer.stroke),
            self.stroke_width(layer)
        )
        .unwrap();
    }

    fn spoke_lines(&self, out: &mut String, center: Point, chords: &[Chord], layer: &LayerStyle) {
        for c in chords {
            self.line(out, center, c.first, layer);
            self.line(out, center, c.second, layer);
        }
    }
}

/// Render the scene and its computed results as a standalone SVG document.
pub fn emit_svg(scene: &Scene, results: &[Computed]) -> String {
    debug_assert_eq!(scene.requests.len(), results.len());
    let (min, max) = drawing_bounds(scene, results);
    let canvas = scene.style.canvas;
    let margin = 0.05 * canvas;
    let span = (max.x - min.x).max(max.y - min.y);
    let scale = (canvas - 2.0 * margin) / span;
    let tx = canvas / 2.0 - scale * (min.x + max.x) / 2.0;
    let ty = canvas / 2.0 + scale * (min.y + max.y) / 2.0;
    let ctx = SvgCtx { scale };

    let c = fmt_f64(canvas, 9, true);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{c}\" height=\"{c}\" viewBox=\"0 0 {c} {c}\">"
    )
    .unwrap();
    out.push_str("<!-- kernel coordinates are y-up; the root group flips and scales them onto the canvas -->\n");
    writeln!(
        out,
        "<g transform=\"matrix({} 0 0 {} {} {})\">",
        fmt_f64(scale, 9, true),
        fmt_f64(-scale, 9, true),
        fmt_f64(tx, 9, true),
        fmt_f64(ty, 9, true)
    )
    .unwrap();

    // Domain layer.
    out.push_str("<g id=\"domain\">\n");
    if let Some(domain) = &scene.domain {
        writeln!(
            out,
            "<path d=\"{}\"{}/>",
            ctx.polygon_path(domain),
            ctx.paint_attrs(&scene.style.domain, true)
        )
        .unwrap();
    }
    out.push_str("</g>\n");

    // Input layer: named polygons and point sets.
    out.push_str("<g id=\"input\">\n");
    for poly in scene.polygons.values() {
        writeln!(
            out,
            "<path d=\"{}\"{}/>",
            ctx.polygon_path(poly),
            ctx.paint_attrs(&scene.style.input, true)
        )
        .unwrap();
    }
    let dot_r = fmt_f64(3.0 / scale, 9, true);
    for pts in scene.points.values() {
        for p in pts {
            writeln!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"{dot_r}\" fill=\"{}\"/>",
                ctx.n(p.x),
                ctx.n(p.y),
                xml_escape(&scene.style.input.stroke)
            )
            .unwrap();
        }
    }
    out.push_str("</g>\n");

    // One group per result, plus one per spoke set.
    for (k, result) in results.iter().enumerate() {
        let style = &scene.style.output;
        let mut spoke_group: Option<(Point, Vec<Chord>)> = None;
        writeln!(out, "<g id=\"output-{k}\">").unwrap();
        match result {
            Computed::Polygon(p) => {
                writeln!(out, "<path d=\"{}\"{}/>", ctx.polygon_path(p), ctx.paint_attrs(style, true))
                    .unwrap();
            }
            Computed::Polar { dual, recentered } => {
                if let Some(shift) = recentered {
                    writeln!(
                        out,
                        "<!-- input translated by {} {} before polar duality -->",
                        ctx.n(shift.x),
                        ctx.n(shift.y)
                    )
                    .unwrap();
                }
                writeln!(
                    out,
                    "<path d=\"{}\"{}/>",
                    ctx.polygon_path(dual),
                    ctx.paint_attrs(style, true)
                )
                .unwrap();
            }
            Computed::EmptyIntersection => {
                out.push_str("<!-- empty intersection -->\n");
            }
            Computed::Region(region) => {
                if !region.is_empty() {
                    writeln!(
                        out,
                        "<path d=\"{}\" fill-rule=\"evenodd\"{}/>",
                        ctx.region_path(region),
                        ctx.paint_attrs(style, true)
                    )
                    .unwrap();
                }
            }
            Computed::Ball(ball) => {
                writeln!(
                    out,
                    "<path d=\"{}\"{}/>",
                    ctx.polygon_path(&ball.boundary),
                    ctx.paint_attrs(style, true)
                )
                .unwrap();
                if let Some(chords) = &ball.spokes {
                    spoke_group = Some((ball.center, chords.clone()));
                }
            }
            Computed::Circle(circle) => {
                writeln!(
                    out,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"{}/>",
                    ctx.n(circle.center.x),
                    ctx.n(circle.center.y),
                    ctx.n(circle.radius),
                    ctx.paint_attrs(style, false)
                )
                .unwrap();
            }
            Computed::Tree { points, tree } => {
                for e in &tree.edges {
                    ctx.line(&mut out, points[e.i], points[e.j], style);
                }
            }
            Computed::Spokes(chords) => {
                // Chords share a common interior point: the request center.
                // Render each chord as a single segment.
                for c in chords {
                    ctx.line(&mut out, c.first, c.second, &scene.style.spokes);
                }
            }
        }
        out.push_str("</g>\n");
        if let Some((center, chords)) = spoke_group {
            writeln!(out, "<g id=\"spokes-{k}\">").unwrap();
            ctx.spoke_lines(&mut out, center, &chords, &scene.style.spokes);
            out.push_str("</g>\n");
        }
    }

    out.push_str("</g>\n</svg>\n");
    out
}
