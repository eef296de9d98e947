//! Scene text parsing and canonical serialization.


use crate::algorithms::MstWeight;
use crate::geom::Point;
use crate::polygon::ConvexPolygon;
use crate::render::fmt_f64;
use crate::scene::{
    ConstructionRequest, PointRef, PolyRef, Scene, SceneError, StyleOptions,
};

/// Parse and validate a scene. Parse errors carry the 1-based line and
/// column of the offending token; validation errors name the request.
pub fn parse_scene(text: &str) -> Result<Scene, SceneError> {
    let mut scene = Scene::default();
    for (line_idx, raw) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let line = match raw.find('#') {
            Some(cut) => &raw[..cut],
            None => raw,
        };
        let tokens = tokenize(line);
        if tokens.is_empty() {
            continue;
        }
        parse_line(&mut scene, line_no, &tokens)?;
    }
    scene.validate()?;
    Ok(scene)
}

struct Tok<'a> {
    col: usize,
    text: &'a str,
}

fn tokenize(line: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Tok { col: s + 1, text: &line[s..i] });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Tok { col: s + 1, text: &line[s..] });
    }
    out
}

fn err(line: usize, tok: &Tok<'_>, message: impl Into<String>) -> SceneError {
    SceneError::Parse { line, column: tok.col, message: message.into() }
}

fn err_eol(line: usize, tokens: &[Tok<'_>], message: impl Into<String>) -> SceneError {
    let column = tokens.last().map_or(1, |t| t.col + t.text.len());
    SceneError::Parse { line, column, message: message.into() }
}

fn parse_line(scene: &mut Scene, line: usize, tokens: &[Tok<'_>]) -> Result<(), SceneError> {
    let kw = &tokens[0];
    let rest = &tokens[1..];
    match kw.text {
        "domain" => {
            if scene.domain.is_some() {
                return Err(err(line, kw, "duplicate domain declaration"));
            }
            scene.domain = Some(parse_polygon(line, tokens, rest)?);
        }
        "polygon" => {
            let name = parse_name(line, tokens, rest.first())?;
            let poly = parse_polygon(line, tokens, &rest[1..])?;
            if scene.polygons.insert(name.to_string(), poly).is_some() {
                return Err(err(line, &rest[0], format!("duplicate polygon `{name}`")));
            }
        }
        "points" => {
            let name = parse_name(line, tokens, rest.first())?;
            let pts = parse_points(line, tokens, &rest[1..])?;
            if pts.is_empty() {
                return Err(err_eol(line, tokens, "expected at least one coordinate pair"));
            }
            if scene.points.insert(name.to_string(), pts).is_some() {
                return Err(err(line, &rest[0], format!("duplicate point set `{name}`")));
            }
        }
        "option" => match rest {
            [opt] if opt.text == "translate_centroid" => scene.translate_centroid = true,
            [opt] => return Err(err(line, opt, format!("unknown option `{}`", opt.text))),
            _ => return Err(err_eol(line, tokens, "expected exactly one option name")),
        },
        "style" => parse_style(&mut scene.style, line, tokens, rest)?,
        _ => {
            let req = parse_request(scene, line, tokens)?;
            scene.requests.push(req);
        }
    }
    Ok(())
}

fn parse_name<'a>(
    line: usize,
    tokens: &[Tok<'_>],
    tok: Option<&Tok<'a>>,
) -> Result<&'a str, SceneError> {
    let Some(tok) = tok else {
        return Err(err_eol(line, tokens, "expected a name"));
    };
    let ok = !tok.text.is_empty()
        && tok.text.chars().next().unwrap().is_ascii_alphabetic()
        && tok.text.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !ok {
        return Err(err(line, tok, format!("invalid name `{}`", tok.text)));
    }
    if tok.text == "domain" {
        return Err(err(line, tok, "`domain` is reserved"));
    }
    Ok(tok.text)
}

fn parse_number(line: usize, tok: &Tok<'_>) -> Result<f64, SceneError> {
    match tok.text.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(err(line, tok, format!("expected a finite number, got `{}`", tok.text))),
    }
}

fn parse_points(line: usize, tokens: &[Tok<'_>], rest: &[Tok<'_>]) -> Result<Vec<Point>, SceneError> {
    if !rest.len().is_multiple_of(2) {
        return Err(err_eol(line, tokens, "coordinates must come in x y pairs"));
    }
    let mut pts = Vec::with_capacity(rest.len() / 2);
    for pair in rest.chunks(2) {
        let x = parse_number(line, &pair[0])?;
        let y = parse_number(line, &pair[1])?;
        pts.push(Point::new(x, y));
    }
    Ok(pts)
}

fn parse_polygon(
    line: usize,
    tokens: &[Tok<'_>],
    rest: &[Tok<'_>],
) -> Result<ConvexPolygon, SceneError> {
    let pts = parse_points(line, tokens, rest)?;
    ConvexPolygon::new(pts).map_err(|e| err_eol(line, tokens, format!("invalid polygon: {e}")))
}

fn parse_point_ref(line: usize, tok: &Tok<'_>) -> Result<PointRef, SceneError> {
    let text = tok.text;
    let (name, index) = match text.find('[') {
        Some(open) => {
            if !text.ends_with(']') {
                return Err(err(line, tok, format!("malformed point reference `{text}`")));
            }
            let idx: usize = text[open + 1..text.len() - 1]
                .parse()
                .map_err(|_| err(line, tok, format!("malformed point reference `{text}`")))?;
            (&text[..open], idx)
        }
        None => (text, 0),
    };
    if name.is_empty() || !name.chars().next().unwrap().is_ascii_alphabetic() {
        return Err(err(line, tok, format!("malformed point reference `{text}`")));
    }
    Ok(PointRef { set: name.to_string(), index })
}

fn parse_poly_ref(tok: &Tok<'_>) -> PolyRef {
    if tok.text == "domain" {
        PolyRef::Domain
    } else {
        PolyRef::Named(tok.text.to_string())
    }
}

fn parse_request(
    scene: &Scene,
    line: usize,
    tokens: &[Tok<'_>],
) -> Result<ConstructionRequest, SceneError> {
    let _ = scene;
    let kw = &tokens[0];
    let rest = &tokens[1..];
    let need = |n: usize| -> Result<(), SceneError> {
        if rest.len() == n {
            Ok(())
        } else {
            Err(err_eol(
                line,
                tokens,
                format!("`{}` expects {n} argument(s), got {}", kw.text, rest.len()),
            ))
        }
    };
    let req = match kw.text {
        "macbeath" => {
            need(1)?;
            ConstructionRequest::Macbeath { at: parse_point_ref(line, &rest[0])? }
        }
        "funk_ball" => {
            need(2)?;
            ConstructionRequest::FunkBall {
                center: parse_point_ref(line, &rest[0])?,
                radius: parse_number(line, &rest[1])?,
            }
        }
        "reverse_funk_ball" => {
            need(2)?;
            ConstructionRequest::ReverseFunkBall {
                center: parse_point_ref(line, &rest[0])?,
                radius: parse_number(line, &rest[1])?,
            }
        }
        "hilbert_ball" => {
            let with_spokes = match rest.len() {
                2 => false,
                3 if rest[2].text == "spokes" => true,
                3 => {
                    return Err(err(line, &rest[2], format!("expected `spokes`, got `{}`", rest[2].text)))
                }
                _ => return Err(err_eol(line, tokens, "`hilbert_ball` expects: center radius [spokes]")),
            };
            ConstructionRequest::HilbertBall {
                center: parse_point_ref(line, &rest[0])?,
                radius: parse_number(line, &rest[1])?,
                with_spokes,
            }
        }
        "spokes" => {
            need(1)?;
            ConstructionRequest::Spokes { at: parse_point_ref(line, &rest[0])? }
        }
        "polar" => {
            need(1)?;
            ConstructionRequest::Polar { of: parse_poly_ref(&rest[0]) }
        }
        "minkowski" | "union" | "intersect" | "subtract" => {
            need(2)?;
            let a = parse_poly_ref(&rest[0]);
            let b = parse_poly_ref(&rest[1]);
            match kw.text {
                "minkowski" => ConstructionRequest::Minkowski { a, b },
                "union" => ConstructionRequest::Union { a, b },
                "intersect" => ConstructionRequest::Intersect { a, b },
                _ => ConstructionRequest::Subtract { a, b },
            }
        }
        "meb" => {
            need(1)?;
            ConstructionRequest::Meb { points: rest[0].text.to_string() }
        }
        "mst" => {
            need(2)?;
            let weight = match rest[1].text {
                "funk_min" => MstWeight::FunkMin,
                "hilbert" => MstWeight::Hilbert,
                other => {
                    return Err(err(line, &rest[1], format!("unknown mst weight `{other}` (expected funk_min or hilbert)")))
                }
            };
            ConstructionRequest::Mst { points: rest[0].text.to_string(), weight }
        }
        other => return Err(err(line, kw, format!("unknown keyword `{other}`"))),
    };
    Ok(req)
}

fn parse_style(
    style: &mut StyleOptions,
    line: usize,
    tokens: &[Tok<'_>],
    rest: &[Tok<'_>],
) -> Result<(), SceneError> {
    let [key, value] = rest else {
        return Err(err_eol(line, tokens, "`style` expects: key value"));
    };
    if key.text == "canvas" {
        let v = parse_number(line, value)?;
        if v <= 0.0 {
            return Err(err(line, value, "canvas size must be positive"));
        }
        style.canvas = v;
        return Ok(());
    }
    let Some((layer_name, field)) = key.text.split_once('.') else {
        return Err(err(line, key, format!("unknown style key `{}`", key.text)));
    };
    let layer = match layer_name {
        "domain" => &mut style.domain,
        "input" => &mut style.input,
        "output" => &mut style.output,
        "spokes" => &mut style.spokes,
        _ => return Err(err(line, key, format!("unknown style layer `{layer_name}`"))),
    };
    match field {
        "stroke" => layer.stroke = value.text.to_string(),
        "fill" => {
            layer.fill = if value.text == "none" {
                None
            } else {
                Some(value.text.to_string())
            }
        }
        "stroke_width" => {
            let v = parse_number(line, value)?;
            if v < 0.0 {
                return Err(err(line, value, "stroke width must be nonnegative"));
            }
            layer.stroke_width = v;
        }
        "fill_opacity" => {
            let v = parse_number(line, value)?;
            if !(0.0..=1.0).contains(&v) {
                return Err(err(line, value, "fill opacity must be in [0, 1]"));
            }
            layer.fill_opacity = v;
        }
        _ => return Err(err(line, key, format!("unknown style field `{field}`"))),
    }
    Ok(())
}

/// Canonical text form of a scene: declarations first (domain, polygons and
/// point sets by name, options, non-default styles), then the requests in
/// order. Parsing the canonical text reproduces the scene exactly.
pub fn canonical_text(scene: &Scene) -> String {
    let mut out = String::new();
    let num = |x: f64| fmt_f64(x, 9, true);
    if let Some(domain) = &scene.domain {
        out.push_str("domain");
        for v in domain.vertices() {
            out.push_str(&format!(" {} {}", num(v.x), num(v.y)));
        }
        out.push('\n');
    }
    for (name, poly) in &scene.polygons {
        out.push_str(&format!("polygon {name}"));
        for v in poly.vertices() {
            out.push_str(&format!(" {} {}", num(v.x), num(v.y)));
        }
        out.push('\n');
    }
    for (name, pts) in &scene.points {
        out.push_str(&format!("points {name}"));
        for p in pts {
            out.push_str(&format!(" {} {}", num(p.x), num(p.y)));
        }
        out.push('\n');
    }
    if scene.translate_centroid {
        out.push_str("option translate_centroid\n");
    }
    let defaults = StyleOptions::default();
    if scene.style.canvas != defaults.canvas {
        out.push_str(&format!("style canvas {}\n", num(scene.style.canvas)));
    }
    for (name, layer, default) in [
        ("domain", &scene.style.domain, &defaults.domain),
        ("input", &scene.style.input, &defaults.input),
        ("output", &scene.style.output, &defaults.output),
        ("spokes", &scene.style.spokes, &defaults.spokes),
    ] {
        if layer.stroke != default.stroke {
            out.push_str(&format!("style {name}.stroke {}\n", layer.stroke));
        }
        if layer.stroke_width != default.stroke_width {
            out.push_str(&format!("style {name}.stroke_width {}\n", num(layer.stroke_width)));
        }
        if layer.fill != default.fill {
            out.push_str(&format!(
                "style {name}.fill {}\n",
                layer.fill.as_deref().unwrap_or("none")
            ));
        }
        if layer.fill_opacity != default.fill_opacity {
            out.push_str(&format!("style {name}.fill_opacity {}\n", num(layer.fill_opacity)));
        }
    }
    for req in &scene.requests {
        out.push_str(&req.to_string());
        out.push('\n');
    }
    out
}
