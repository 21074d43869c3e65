//! The sixteen reflexive polygons and the bundled polytope corpus.
//!
//! The polygon list is certified by an exhaustive search in the unit
//! tests: every subset of the primitive lattice points in the box
//! [-2, 2]^2 whose convex hull is reflexive falls into exactly sixteen
//! unimodular equivalence classes, one per entry below.

use num_bigint::BigInt;

use crate::error::Result;
use crate::linalg::IntVector;
use crate::polytope::LatticePolytope;

/// Vertex lists of the sixteen reflexive polygons, one representative per
/// unimodular class, ordered by vertex count and then lexicographically.
const POLYGON_VERTICES: [&[[i64; 2]]; 16] = [
    &[[-2, 1], [0, 1], [1, -2]],
    &[[-2, 1], [1, -2], [1, 1]],
    &[[-1, -2], [-1, 2], [1, 0]],
    &[[-1, 0], [0, 1], [1, -2]],
    &[[-1, 1], [0, 1], [1, -2]],
    &[[-2, 1], [0, 1], [1, -2], [1, 0]],
    &[[-1, -1], [-1, 2], [0, 1], [1, -1]],
    &[[-1, 0], [-1, 1], [0, 1], [1, -2]],
    &[[-1, 0], [-1, 2], [0, 1], [1, -2]],
    &[[-1, 0], [-1, 2], [1, -2], [1, 0]],
    &[[-1, 1], [-1, 2], [0, 1], [1, -2]],
    &[[-1, 2], [0, -1], [0, 1], [1, -2]],
    &[[-1, 0], [-1, 2], [0, -1], [0, 1], [1, -1]],
    &[[-1, 0], [-1, 2], [0, 1], [1, -2], [1, -1]],
    &[[-1, 1], [-1, 2], [0, -1], [0, 1], [1, -2]],
    &[[-1, 1], [-1, 2], [0, -1], [0, 1], [1, -2], [1, -1]],
];

fn polygon_from(data: &[[i64; 2]]) -> LatticePolytope {
    let pts: Vec<IntVector> = data
        .iter()
        .map(|&[x, y]| vec![BigInt::from(x), BigInt::from(y)])
        .collect();
    LatticePolytope::from_vertices(pts).expect("embedded polygon data is valid")
}

/// The sixteen reflexive polygons, indexed 0 to 15.
pub fn reflexive_polygons() -> Vec<LatticePolytope> {
    POLYGON_VERTICES.iter().map(|d| polygon_from(d)).collect()
}

/// Cartesian product of two polytopes; dimensions add.
pub fn product(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    let mut pts = Vec::with_capacity(p.vertices().len() * q.vertices().len());
    for a in p.vertices() {
        for b in q.vertices() {
            let mut v = a.clone();
            v.extend(b.iter().cloned());
            pts.push(v);
        }
    }
    LatticePolytope::from_vertices(pts)
}

fn v4(a: i64, b: i64, c: i64, d: i64) -> IntVector {
    vec![BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d)]
}

/// Newton polytope of the quintic threefold: the degree-five simplex.
pub fn quintic_simplex() -> LatticePolytope {
    LatticePolytope::from_vertices(vec![
        v4(4, -1, -1, -1),
        v4(-1, 4, -1, -1),
        v4(-1, -1, 4, -1),
        v4(-1, -1, -1, 4),
        v4(-1, -1, -1, -1),
    ])
    .expect("quintic simplex is valid")
}

/// The polar dual of the quintic simplex: the standard simplex with
/// vertices at the unit vectors and minus their sum.
pub fn quintic_dual_simplex() -> LatticePolytope {
    LatticePolytope::from_vertices(vec![
        v4(1, 0, 0, 0),
        v4(0, 1, 0, 0),
        v4(0, 0, 1, 0),
        v4(0, 0, 0, 1),
        v4(-1, -1, -1, -1),
    ])
    .expect("standard simplex is valid")
}

/// The cube [-1, 1]^4.
pub fn four_cube() -> LatticePolytope {
    let mut pts = Vec::new();
    for a in [-1i64, 1] {
        for b in [-1i64, 1] {
            for c in [-1i64, 1] {
                for d in [-1i64, 1] {
                    pts.push(v4(a, b, c, d));
                }
            }
        }
    }
    LatticePolytope::from_vertices(pts).expect("cube is valid")
}

/// The cross-polytope conv{±e1, ..., ±e4}.
pub fn four_cross() -> LatticePolytope {
    LatticePolytope::from_vertices(vec![
        v4(1, 0, 0, 0),
        v4(-1, 0, 0, 0),
        v4(0, 1, 0, 0),
        v4(0, -1, 0, 0),
        v4(0, 0, 1, 0),
        v4(0, 0, -1, 0),
        v4(0, 0, 0, 1),
        v4(0, 0, 0, -1),
    ])
    .expect("cross-polytope is valid")
}

/// The named corpus: all pairwise products of the sixteen reflexive
/// polygons (including squares, unordered) plus the quintic simplex, the
/// cube, and the cross-polytope. Deterministic order and content.
pub fn corpus() -> Vec<(String, LatticePolytope)> {
    let polygons = reflexive_polygons();
    let mut out = Vec::new();
    for i in 0..polygons.len() {
        for j in i..polygons.len() {
            let name = format!("p{:02}xp{:02}", i + 1, j + 1);
            let prod = product(&polygons[i], &polygons[j])
                .expect("product of reflexive polygons is a valid 4-polytope");
            out.push((name, prod));
        }
    }
    out.push(("quintic".to_string(), quintic_simplex()));
    out.push(("cube4".to_string(), four_cube()));
    out.push(("cross4".to_string(), four_cross()));
    out
}
