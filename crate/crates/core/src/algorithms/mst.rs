//! Minimum spanning trees under the Funk and Hilbert metrics.

use crate::error::{Error, Result};
use crate::geom::{Point, EPS};
use crate::metrics::{funk_distance, hilbert_distance};
use crate::polygon::ConvexPolygon;

/// Edge weighting for [`metric_mst`]. The Funk variant symmetrizes the
/// asymmetric metric by taking the smaller of the two directed distances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MstWeight {
    FunkMin,
    Hilbert,
}

impl MstWeight {
    pub fn name(&self) -> &'static str {
        match self {
            MstWeight::FunkMin => "funk_min",
            MstWeight::Hilbert => "hilbert",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TreeEdge {
    pub i: usize,
    pub j: usize,
    pub weight: f64,
}

/// A spanning tree over point indices `0..n`, edges sorted lexicographically.
#[derive(Debug, Clone, PartialEq)]
pub struct Tree {
    pub edges: Vec<TreeEdge>,
    pub total_weight: f64,
}

/// Exact MST of the complete graph over `points` with the chosen metric
/// weights, by Prim's algorithm over a dense matrix in O(n^2). Ties are
/// broken toward smaller vertex indices, so identical input yields an
/// identical edge list.
pub fn metric_mst(omega: &ConvexPolygon, points: &[Point], kind: MstWeight) -> Result<Tree> {
    let n = points.len();
    if n < 2 {
        return Err(Error::InsufficientPoints { needed: 2, got: n });
    }
    for p in points {
        if !omega.contains_interior(*p) {
            return Err(Error::OriginNotInterior);
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (points[i] - points[j]).norm() <= EPS {
                return Err(Error::DuplicatePoints);
            }
        }
    }

    let weights = weight_matrix(omega, points, kind)?;
    Ok(prim(&weights))
}

/// Symmetric pairwise weight matrix; each unordered pair is evaluated once
/// so the two triangles are bitwise equal.
fn weight_matrix(omega: &ConvexPolygon, points: &[Point], kind: MstWeight) -> Result<Vec<Vec<f64>>> {
    let n = points.len();
    let mut w = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let v = match kind {
                MstWeight::FunkMin => funk_distance(omega, points[i], points[j])?
                    .min(funk_distance(omega, points[j], points[i])?),
                MstWeight::Hilbert => hilbert_distance(omega, points[i], points[j])?,
            };
            w[i][j] = v;
            w[j][i] = v;
        }
    }
    Ok(w)
}

fn prim(w: &[Vec<f64>]) -> Tree {
    let n = w.len();
    let mut in_tree = vec![false; n];
    let mut key = vec![f64::INFINITY; n];
    let mut parent = vec![usize::MAX; n];
    key[0] = 0.0;

    for _ in 0..n {
        let mut best = usize::MAX;
        for v in 0..n {
            if !in_tree[v] && (best == usize::MAX || key[v] < key[best]) {
                best = v;
            }
        }
        in_tree[best] = true;
        for v in 0..n {
            if !in_tree[v] && w[best][v] < key[v] {
                key[v] = w[best][v];
                parent[v] = best;
            }
        }
    }

    let mut edges: Vec<TreeEdge> = (1..n)
        .map(|v| TreeEdge {
            i: v.min(parent[v]),
            j: v.max(parent[v]),
            weight: w[v][parent[v]],
        })
        .collect();
    edges.sort_by_key(|a| (a.i, a.j));
    let total_weight = edges.iter().map(|e| e.weight).sum();
    Tree { edges, total_weight }
}
