//! Shared helpers for the integration suites: structural XML validation
//! for the two output formats and independent brute-force oracles.

#![allow(dead_code)]

use hilbert_kit::{convex_hull, ConvexPolygon, Point};

/// Assert that a document is well-formed XML with the SVG 1.1 root.
pub fn validate_svg(text: &str) {
    let doc = roxmltree::Document::parse(text).expect("SVG output must be well-formed XML");
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    assert_eq!(root.tag_name().namespace(), Some("http://www.w3.org/2000/svg"));
    assert_eq!(root.attribute("version"), Some("1.1"));
}

/// Assert the Ipe 7 document structure: an `ipe` root carrying version and
/// creator, one page whose objects sit on declared layers, and path data
/// made of coordinate pairs with the `m`/`l`/`h`/`e` operators.
pub fn validate_ipe(text: &str) {
    let opts = roxmltree::ParsingOptions { allow_dtd: true, ..Default::default() };
    let doc = roxmltree::Document::parse_with_options(text, opts)
        .expect("Ipe output must be well-formed XML");
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "ipe");
    assert!(root.attribute("version").is_some(), "ipe root needs a version");
    assert!(root.attribute("creator").is_some(), "ipe root needs a creator");

    let pages: Vec<_> = root.children().filter(|n| n.has_tag_name("page")).collect();
    assert_eq!(pages.len(), 1, "expected exactly one page");
    let page = pages[0];

    let layers: Vec<&str> = page
        .children()
        .filter(|n| n.has_tag_name("layer"))
        .map(|n| n.attribute("name").expect("layer needs a name"))
        .collect();
    assert!(!layers.is_empty());

    // Symbolic attribute values must be defined by an embedded stylesheet.
    let mut symbols: Vec<String> = Vec::new();
    for style in root.children().filter(|n| n.has_tag_name("ipestyle")) {
        for def in style.children().filter(|n| n.is_element()) {
            if let Some(name) = def.attribute("name") {
                symbols.push(format!("{}:{name}", def.tag_name().name()));
            }
        }
    }

    for node in page.descendants().filter(|n| n.is_element()) {
        match node.tag_name().name() {
            "path" => {
                if let Some(layer) = node.attribute("layer") {
                    assert!(layers.contains(&layer), "path on undeclared layer {layer}");
                }
                validate_ipe_path_data(node.text().unwrap_or(""));
                for (attr, kind) in [("stroke", "color"), ("fill", "color"), ("opacity", "opacity")] {
                    if let Some(v) = node.attribute(attr) {
                        let symbolic = symbols.contains(&format!("{kind}:{v}"));
                        let absolute = v.split_whitespace().all(|t| t.parse::<f64>().is_ok());
                        assert!(symbolic || absolute, "undefined symbolic {attr} `{v}`");
                    }
                }
            }
            "use" => {
                if let Some(layer) = node.attribute("layer") {
                    assert!(layers.contains(&layer), "use on undeclared layer {layer}");
                }
                assert!(node.attribute("pos").is_some(), "use needs a pos");
                let name = node.attribute("name").expect("use needs a name");
                assert!(
                    symbols.contains(&format!("symbol:{name}")),
                    "undefined symbol `{name}`"
                );
            }
            _ => {}
        }
    }
}

/// Path data grammar: subpaths of `x y m` followed by `x y l` closed with
/// `h`, or a 6-number ellipse `e`.
fn validate_ipe_path_data(data: &str) {
    let tokens: Vec<&str> = data.split_whitespace().collect();
    assert!(!tokens.is_empty(), "empty path data");
    let mut nums = 0usize;
    let mut started = false;
    for t in &tokens {
        match *t {
            "m" => {
                assert_eq!(nums, 2, "`m` needs two coordinates");
                nums = 0;
                started = true;
            }
            "l" => {
                assert!(started, "`l` before `m`");
                assert_eq!(nums, 2, "`l` needs two coordinates");
                nums = 0;
            }
            "h" => {
                assert!(started, "`h` before `m`");
                assert_eq!(nums, 0, "dangling coordinates before `h`");
            }
            "e" => {
                assert_eq!(nums, 6, "`e` needs a 6-number transform");
                nums = 0;
            }
            other => {
                other.parse::<f64>().unwrap_or_else(|_| panic!("bad token `{other}` in path data"));
                nums += 1;
            }
        }
    }
    assert_eq!(nums, 0, "dangling coordinates at end of path data");
}

/// Cyclic vertex-list equality within a tolerance (polygons are rotated to
/// a canonical start, but tests that compare across different construction
/// routes should not rely on that).
pub fn polygons_match(a: &ConvexPolygon, b: &ConvexPolygon, tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let av = a.vertices();
    let bv = b.vertices();
    (0..n).any(|shift| (0..n).all(|i| (av[i] - bv[(i + shift) % n]).norm() <= tol))
}

/// Brute-force minimum enclosing circle: best circle over all 1-, 2- and
/// 3-point supports. O(n^4); for oracle use only.
pub fn brute_force_meb(points: &[Point]) -> (Point, f64) {
    let contains_all = |c: Point, r: f64| points.iter().all(|p| c.distance(*p) <= r + 1e-9);
    let mut best: Option<(Point, f64)> = None;
    let mut consider = |c: Point, r: f64| {
        if contains_all(c, r) && best.is_none_or(|(_, br)| r < br) {
            best = Some((c, r));
        }
    };

    if points.len() == 1 {
        return (points[0], 0.0);
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let c = Point::new(
                (points[i].x + points[j].x) / 2.0,
                (points[i].y + points[j].y) / 2.0,
            );
            consider(c, c.distance(points[i]));
            for k in (j + 1)..points.len() {
                if let Some((c, r)) = circumcircle(points[i], points[j], points[k]) {
                    consider(c, r);
                }
            }
        }
    }
    best.expect("at least one candidate circle")
}

fn circumcircle(a: Point, b: Point, c: Point) -> Option<(Point, f64)> {
    let d = 2.0 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
    if d.abs() < 1e-12 {
        return None;
    }
    let a2 = a.x * a.x + a.y * a.y;
    let b2 = b.x * b.x + b.y * b.y;
    let c2 = c.x * c.x + c.y * c.y;
    let ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
    let uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
    let center = Point::new(ux, uy);
    let r = center.distance(a).max(center.distance(b)).max(center.distance(c));
    Some((center, r))
}

/// Brute-force MST weight over the complete graph by Prüfer-sequence
/// enumeration of all n^(n-2) spanning trees (n <= 7 intended).
pub fn brute_force_mst_weight(weights: &[Vec<f64>]) -> f64 {
    let n = weights.len();
    assert!(n >= 2);
    if n == 2 {
        return weights[0][1];
    }
    let seq_len = n - 2;
    let total = (n as u64).pow(seq_len as u32);
    let mut best = f64::INFINITY;
    let mut seq = vec![0usize; seq_len];
    for code in 0..total {
        let mut c = code;
        for s in seq.iter_mut() {
            *s = (c % n as u64) as usize;
            c /= n as u64;
        }
        let w = prufer_tree_weight(&seq, weights);
        if w < best {
            best = w;
        }
    }
    best
}

fn prufer_tree_weight(seq: &[usize], weights: &[Vec<f64>]) -> f64 {
    let n = weights.len();
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut total = 0.0;
    let mut degree = degree;
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        total += weights[leaf][s];
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    assert_eq!(rest.len(), 2);
    total + weights[rest[0]][rest[1]]
}

/// Minkowski-sum oracle: convex hull of all pairwise vertex sums.
pub fn hull_of_vertex_sums(a: &ConvexPolygon, b: &ConvexPolygon) -> ConvexPolygon {
    let mut pts = Vec::with_capacity(a.len() * b.len());
    for u in a.vertices() {
        for v in b.vertices() {
            pts.push(Point::new(u.x + v.x, u.y + v.y));
        }
    }
    convex_hull(&pts).expect("sum polygon is non-degenerate")
}
