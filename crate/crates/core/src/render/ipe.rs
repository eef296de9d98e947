//! Ipe 7 XML output.
//!
//! The document is self-contained: an embedded stylesheet defines the page
//! layout, the disk mark symbol, and every color and opacity it references,
//! so files open in the editor without companion styles. Ipe is y-up like
//! the kernel; coordinates are only scaled and shifted onto the page.
//! Output is byte-deterministic.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::geom::{Chord, Point};
use crate::ops::Region;
use crate::polygon::ConvexPolygon;
use crate::render::{color_rgb, drawing_bounds, fmt_f64};
use crate::scene::{Computed, LayerStyle, Scene};

struct IpeCtx {
    scale: f64,
    tx: f64,
    ty: f64,
    /// Symbolic color name -> rgb, collected into the stylesheet.
    colors: BTreeMap<String, (f64, f64, f64)>,
    /// Symbolic opacity names, collected into the stylesheet.
    opacities: BTreeMap<String, f64>,
}

impl IpeCtx {
    fn map(&self, p: Point) -> (f64, f64) {
        (self.tx + self.scale * p.x, self.ty + self.scale * p.y)
    }

    fn coords(&self, p: Point) -> String {
        let (x, y) = self.map(p);
        format!("{} {}", fmt_f64(x, 9, true), fmt_f64(y, 9, true))
    }

    fn color(&mut self, name: &str) -> String {
        let key = sanitize_symbol(name);
        self.colors.entry(key.clone()).or_insert_with(|| color_rgb(name));
        key
    }

    fn opacity(&mut self, value: f64) -> String {
        let key = format!("{}%", fmt_f64((value * 100.0).round(), 9, true));
        self.opacities.entry(key.clone()).or_insert(value);
        key
    }

    fn path_attrs(&mut self, layer: &str, style: &LayerStyle, filled: bool) -> String {
        let mut s = format!(
            " layer=\"{layer}\" stroke=\"{}\" pen=\"{}\"",
            self.color(&style.stroke),
            fmt_f64(style.stroke_width, 9, true)
        );
        if filled {
            if let Some(fill) = &style.fill {
                write!(
                    s,
                    " fill=\"{}\" opacity=\"{}\"",
                    self.color(fill),
                    self.opacity(style.fill_opacity)
                )
                .unwrap();
            }
        }
        s
    }

    fn ring_data(&self, pts: &[Point]) -> String {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let op = if i == 0 { 'm' } else { 'l' };
            writeln!(d, "{} {op}", self.coords(*p)).unwrap();
        }
        d.push_str("h\n");
        d
    }

    fn polygon(&mut self, out: &mut String, poly: &ConvexPolygon, layer: &str, style: &LayerStyle) {
        let attrs = self.path_attrs(layer, style, true);
        write!(out, "<path{attrs}>\n{}</path>\n", self.ring_data(poly.vertices())).unwrap();
    }

    fn region(&mut self, out: &mut String, region: &Region, layer: &str, style: &LayerStyle) {
        if region.is_empty() {
            return;
        }
        let mut attrs = self.path_attrs(layer, style, true);
        if region.rings().len() > 1 {
            attrs.push_str(" fillrule=\"eofill\"");
        }
        writeln!(out, "<path{attrs}>").unwrap();
        for ring in region.rings() {
            out.push_str(&self.ring_data(ring.points()));
        }
        out.push_str("</path>\n");
    }

    fn segment(&mut self, out: &mut String, a: Point, b: Point, layer: &str, style: &LayerStyle) {
        let attrs = self.path_attrs(layer, style, false);
        write!(
            out,
            "<path{attrs}>\n{} m\n{} l\n</path>\n",
            self.coords(a),
            self.coords(b)
        )
        .unwrap();
    }

    fn mark(&mut self, out: &mut String, p: Point, layer: &str, style: &LayerStyle) {
        let stroke = self.color(&style.stroke);
        writeln!(
            out,
            "<use layer=\"{layer}\" name=\"mark/disk(sx)\" pos=\"{}\" size=\"4\" stroke=\"{stroke}\"/>",
            self.coords(p)
        )
        .unwrap();
    }

    fn circle(&mut self, out: &mut String, center: Point, radius: f64, layer: &str, style: &LayerStyle) {
        let attrs = self.path_attrs(layer, style, false);
        let (cx, cy) = self.map(center);
        let r = fmt_f64(self.scale * radius, 9, true);
        write!(
            out,
            "<path{attrs}>\n{r} 0 0 {r} {} {} e\n</path>\n",
            fmt_f64(cx, 9, true),
            fmt_f64(cy, 9, true)
        )
        .unwrap();
    }

    fn spokes(&mut self, out: &mut String, center: Point, chords: &[Chord], style: &LayerStyle) {
        for c in chords {
            self.segment(out, center, c.first, "spokes", style);
            self.segment(out, center, c.second, "spokes", style);
        }
    }
}

fn sanitize_symbol(name: &str) -> String {
    let mut key: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '-' })
        .collect();
    if key.is_empty() {
        key.push('c');
    }
    key
}

/// Render the scene and its computed results as an Ipe 7 XML document.
pub fn emit_ipe(scene: &Scene, results: &[Computed]) -> String {
    debug_assert_eq!(scene.requests.len(), results.len());
    let (min, max) = drawing_bounds(scene, results);
    let canvas = scene.style.canvas;
    let margin = 0.05 * canvas;
    let span = (max.x - min.x).max(max.y - min.y);
    let scale = (canvas - 2.0 * margin) / span;
    let mut ctx = IpeCtx {
        scale,
        tx: canvas / 2.0 - scale * (min.x + max.x) / 2.0,
        ty: canvas / 2.0 - scale * (min.y + max.y) / 2.0,
        colors: BTreeMap::new(),
        opacities: BTreeMap::new(),
    };

    // Page content is assembled first so the stylesheet can declare exactly
    // the symbolic names it uses.
    let mut body = String::new();
    for layer in ["domain", "input", "output", "spokes"] {
        writeln!(body, "<layer name=\"{layer}\"/>").unwrap();
    }
    body.push_str("<view layers=\"domain input output spokes\" active=\"output\"/>\n");

    if let Some(domain) = &scene.domain {
        ctx.polygon(&mut body, domain, "domain", &scene.style.domain);
    }
    for poly in scene.polygons.values() {
        ctx.polygon(&mut body, poly, "input", &scene.style.input);
    }
    for pts in scene.points.values() {
        for p in pts {
            ctx.mark(&mut body, *p, "input", &scene.style.input);
        }
    }

    for result in results {
        let style = &scene.style.output;
        match result {
            Computed::Polygon(p) => ctx.polygon(&mut body, p, "output", style),
            Computed::Polar { dual, recentered } => {
                if let Some(shift) = recentered {
                    writeln!(
                        body,
                        "<!-- input translated by {} {} before polar duality -->",
                        fmt_f64(shift.x, 9, true),
                        fmt_f64(shift.y, 9, true)
                    )
                    .unwrap();
                }
                ctx.polygon(&mut body, dual, "output", style);
            }
            Computed::EmptyIntersection => body.push_str("<!-- empty intersection -->\n"),
            Computed::Region(region) => ctx.region(&mut body, region, "output", style),
            Computed::Ball(ball) => {
                ctx.polygon(&mut body, &ball.boundary, "output", style);
                if let Some(chords) = &ball.spokes {
                    ctx.spokes(&mut body, ball.center, chords, &scene.style.spokes);
                }
            }
            Computed::Circle(c) => ctx.circle(&mut body, c.center, c.radius, "output", style),
            Computed::Tree { points, tree } => {
                for e in &tree.edges {
                    ctx.segment(&mut body, points[e.i], points[e.j], "output", style);
                }
            }
            Computed::Spokes(chords) => {
                for c in chords {
                    ctx.segment(&mut body, c.first, c.second, "spokes", &scene.style.spokes);
                }
            }
        }
    }

    let c = fmt_f64(canvas, 9, true);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\"?>\n");
    out.push_str("<!DOCTYPE ipe SYSTEM \"ipe.dtd\">\n");
    out.push_str("<ipe version=\"70218\" creator=\"hilbert-kit\">\n");
    out.push_str("<ipestyle name=\"hilbert-kit\">\n");
    writeln!(out, "<layout paper=\"{c} {c}\" origin=\"0 0\" frame=\"{c} {c}\"/>").unwrap();
    out.push_str("<symbol name=\"mark/disk(sx)\" transformations=\"translations\">\n");
    out.push_str("<path fill=\"sym-stroke\">\n0.6 0 0 0.6 0 0 e\n</path>\n</symbol>\n");
    for (name, (r, g, b)) in &ctx.colors {
        writeln!(
            out,
            "<color name=\"{name}\" value=\"{} {} {}\"/>",
            fmt_f64(*r, 9, true),
            fmt_f64(*g, 9, true),
            fmt_f64(*b, 9, true)
        )
        .unwrap();
    }
    for (name, value) in &ctx.opacities {
        writeln!(out, "<opacity name=\"{name}\" value=\"{}\"/>", fmt_f64(*value, 9, true)).unwrap();
    }
    out.push_str("</ipestyle>\n<page>\n");
    out.push_str(&body);
    out.push_str("</page>\n</ipe>\n");
    out
}
