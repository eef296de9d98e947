//! Figure emission: shared numeric formatting, bounds, and color handling
//! for the SVG and Ipe backends.

mod ipe;
mod svg;

pub use ipe::emit_ipe;
pub use svg::emit_svg;

use crate::geom::Point;
use crate::scene::{Computed, Scene};

/// Format a float with up to `sig` significant digits in plain decimal
/// notation (no exponent), locale independent. With `trim` set, trailing
/// zeros after the decimal point are removed.
pub fn fmt_f64(x: f64, sig: i32, trim: bool) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (sig - 1 - mag).clamp(0, 330) as usize;
    let mut s = format!("{x:.decimals$}");
    if trim && s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" || s.chars().all(|c| matches!(c, '-' | '0' | '.')) {
        return "0".to_string();
    }
    s
}

/// Minimal XML attribute/text escaping.
pub(crate) fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

/// Bounding box of everything the scene will draw. Falls back to the unit
/// box for scenes with no geometry.
pub(crate) fn drawing_bounds(scene: &Scene, results: &[Computed]) -> (Point, Point) {
    let mut min = Point::new(f64::INFINITY, f64::INFINITY);
    let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut grow = |p: Point| {
        min.x = min.x.min(p.x);
        min.y = min.y.min(p.y);
        max.x = max.x.max(p.x);
        max.y = max.y.max(p.y);
    };

    if let Some(d) = &scene.domain {
        d.vertices().iter().copied().for_each(&mut grow);
    }
    for poly in scene.polygons.values() {
        poly.vertices().iter().copied().for_each(&mut grow);
    }
    for pts in scene.points.values() {
        pts.iter().copied().for_each(&mut grow);
    }
    for r in results {
        match r {
            Computed::Polygon(p) => p.vertices().iter().copied().for_each(&mut grow),
            Computed::Polar { dual, .. } => dual.vertices().iter().copied().for_each(&mut grow),
            Computed::EmptyIntersection => {}
            Computed::Region(region) => {
                for ring in region.rings() {
                    ring.points().iter().copied().for_each(&mut grow);
                }
            }
            Computed::Ball(b) => {
                b.boundary.vertices().iter().copied().for_each(&mut grow);
                if let Some(chords) = &b.spokes {
                    for c in chords {
                        grow(c.first);
                        grow(c.second);
                    }
                }
            }
            Computed::Circle(c) => {
                grow(Point::new(c.center.x - c.radius, c.center.y - c.radius));
                grow(Point::new(c.center.x + c.radius, c.center.y + c.radius));
            }
            Computed::Tree { points, .. } => points.iter().copied().for_each(&mut grow),
            Computed::Spokes(chords) => {
                for c in chords {
                    grow(c.first);
                    grow(c.second);
                }
            }
        }
    }

    if !min.is_finite() || !max.is_finite() {
        return (Point::new(0.0, 0.0), Point::new(1.0, 1.0));
    }
    if max.x - min.x < 1e-9 {
        min.x -= 0.5;
        max.x += 0.5;
    }
    if max.y - min.y < 1e-9 {
        min.y -= 0.5;
        max.y += 0.5;
    }
    (min, max)
}

/// RGB triple in [0, 1] for a color written as a CSS-style name, `#rgb`,
/// `#rrggbb`, or "r g b" floats. Unknown names fall back to black.
pub(crate) fn color_rgb(name: &str) -> (f64, f64, f64) {
    let named: &[(&str, (u8, u8, u8))] = &[
        ("black", (0, 0, 0)),
        ("white", (255, 255, 255)),
        ("red", (255, 0, 0)),
        ("green", (0, 128, 0)),
        ("blue", (0, 0, 255)),
        ("gray", (128, 128, 128)),
        ("lightgray", (211, 211, 211)),
        ("dimgray", (105, 105, 105)),
        ("gainsboro", (220, 220, 220)),
        ("royalblue", (65, 105, 225)),
        ("steelblue", (70, 130, 180)),
        ("lightsteelblue", (176, 196, 222)),
        ("navy", (0, 0, 128)),
        ("seagreen", (46, 139, 87)),
        ("firebrick", (178, 34, 34)),
        ("crimson", (220, 20, 60)),
        ("orange", (255, 165, 0)),
        ("gold", (255, 215, 0)),
        ("purple", (128, 0, 128)),
        ("teal", (0, 128, 128)),
    ];
    if let Some(hex) = name.strip_prefix('#') {
        let parse = |s: &str| u8::from_str_radix(s, 16).ok();
        let rgb = match hex.len() {
            3 => {
                let h = |i: usize| parse(&hex[i..i + 1]).map(|v| v * 17);
                h(0).zip(h(1)).zip(h(2)).map(|((r, g), b)| (r, g, b))
            }
            6 => {
                let h = |i: usize| parse(&hex[i..i + 2]);
                h(0).zip(h(2)).zip(h(4)).map(|((r, g), b)| (r, g, b))
            }
            _ => None,
        };
        if let Some((r, g, b)) = rgb {
            return (r as f64 / 255.0, g as f64 / 255.0, b as f64 / 255.0);
        }
    }
    let parts: Vec<f64> = name.split_whitespace().filter_map(|t| t.parse().ok()).collect();
    if parts.len() == 3 && parts.iter().all(|v| (0.0..=1.0).contains(v)) {
        return (parts[0], parts[1], parts[2]);
    }
    for (n, (r, g, b)) in named {
        if *n == name {
            return (*r as f64 / 255.0, *g as f64 / 255.0, *b as f64 / 255.0);
        }
    }
    (0.0, 0.0, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt_f64_significant_digits() {
        assert_eq!(fmt_f64(0.5, 9, true), "0.5");
        assert_eq!(fmt_f64(-1.25, 9, true), "-1.25");
        assert_eq!(fmt_f64(0.0, 9, true), "0");
        assert_eq!(fmt_f64(-0.0, 12, false), "0");
        assert_eq!(fmt_f64(1234.56789, 9, true), "1234.56789");
        assert_eq!(fmt_f64(0.5493061443340549, 12, false), "0.549306144334");
        assert_eq!(fmt_f64(2.0_f64.ln(), 12, false), "0.693147180560");
        // Formatting is stable through a parse round trip.
        let x = std::f64::consts::PI;
        let s1 = fmt_f64(x, 9, true);
        let s2 = fmt_f64(s1.parse::<f64>().unwrap(), 9, true);
        assert_eq!(s1, s2);
    }

    #[test]
    fn color_parsing() {
        assert_eq!(color_rgb("black"), (0.0, 0.0, 0.0));
        assert_eq!(color_rgb("#ff0000"), (1.0, 0.0, 0.0));
        assert_eq!(color_rgb("#f00"), (1.0, 0.0, 0.0));
        assert_eq!(color_rgb("0.25 0.5 1"), (0.25, 0.5, 1.0));
        assert_eq!(color_rgb("no-such-color"), (0.0, 0.0, 0.0));
    }

    #[test]
    fn escapes_xml() {
        assert_eq!(xml_escape("a<b>&\"c'"), "a&lt;b&gt;&amp;&quot;c&apos;");
    }
}
