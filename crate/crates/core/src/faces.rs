//! Lattice point counts and areas of edges and 2-faces.
//!
//! All counting happens in coordinates of the face's own affine lattice:
//! a saturated basis of the direction space maps the face to a lattice
//! polygon in Z^2, where point enumeration and the shoelace area are
//! immediate. Counts are therefore invariant under unimodular changes of
//! the ambient coordinates by construction.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{express_in_basis, gcd_content, hermite_basis, vec_sub, IntVector};
use crate::polytope::{Face, LatticePolytope};

/// Counts attached to a 2-face.
///
/// `s0` interior points, `b` boundary points, `s2` the normalized area
/// (twice the Euclidean area in lattice coordinates), and
/// `s1 = s0 + s2 - 1`, so that `s0 - s1 + s2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoFaceCounts {
    pub s0: u64,
    pub s1: u64,
    pub s2: u64,
    pub b: u64,
}

impl TwoFaceCounts {
    /// Euclidean area in saturated lattice coordinates, `s2 / 2`.
    pub fn vol2(&self) -> Rational64 {
        Rational64::new(self.s2 as i64, 2)
    }
}

/// Invariants of a face, by dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaceInvariants {
    /// An edge of lattice length `len`: `len + 1` lattice points, of which
    /// `len - 1` are interior.
    Edge { face_id: usize, len: u64 },
    /// A 2-face with its full point and area counts.
    TwoFace { face_id: usize, counts: TwoFaceCounts },
}

fn face_vertex_coords(p: &LatticePolytope, face: &Face) -> Vec<IntVector> {
    face.vertex_ids.iter().map(|&i| p.vertices()[i].clone()).collect()
}

/// Lattice length of an edge: the content of the difference of its
/// endpoints. The edge carries `len + 1` lattice points.
pub fn edge_len(p: &LatticePolytope, face: &Face) -> Result<u64> {
    if face.dim != 1 {
        return Err(Error::UnsupportedFaceDimension { dim: face.dim });
    }
    let vs = face_vertex_coords(p, face);
    debug_assert_eq!(vs.len(), 2);
    let g = gcd_content(&vec_sub(&vs[1], &vs[0]));
    g.to_u64().ok_or_else(|| {
        Error::InternalInconsistency("edge length does not fit in u64".into())
    })
}

/// Cross product `(a - o) x (b - o)` of 2D points.
fn cross(o: &(BigInt, BigInt), a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> BigInt {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Counterclockwise convex hull cycle of 2D lattice points (monotone
/// chain). Collinear intermediate points are dropped.
fn hull_2d(points: &[(BigInt, BigInt)]) -> Vec<(BigInt, BigInt)> {
    let mut pts: Vec<(BigInt, BigInt)> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(BigInt, BigInt)> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<(BigInt, BigInt)> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Maps the vertices of a 2-face into coordinates of its own lattice.
///
/// Returns the base vertex, the saturated basis (two rows), and the
/// mapped vertex coordinates.
fn two_face_chart(
    p: &LatticePolytope,
    face: &Face,
) -> Result<(IntVector, crate::linalg::IntMatrix, Vec<(BigInt, BigInt)>)> {
    let vs = face_vertex_coords(p, face);
    let base = vs[0].clone();
    let diffs: Vec<IntVector> = vs[1..].iter().map(|v| vec_sub(v, &base)).collect();
    let basis = hermite_basis(&diffs)?;
    if basis.rows() != 2 {
        return Err(Error::InternalInconsistency(format!(
            "2-face with direction lattice of rank {}",
            basis.rows()
        )));
    }
    let mut mapped = vec![(BigInt::zero(), BigInt::zero())];
    for v in &vs[1..] {
        let c = express_in_basis(&basis, &vec_sub(v, &base)).ok_or_else(|| {
            Error::InternalInconsistency(
                "2-face vertex outside the saturated direction lattice".into(),
            )
        })?;
        mapped.push((c[0].clone(), c[1].clone()));
    }
    Ok((base, basis, mapped))
}

/// All lattice points of an edge or a 2-face, split into points of the
/// relative interior and of the relative boundary (for an edge: its
/// endpoints). Both lists are sorted.
pub fn lattice_points_of_face(
    p: &LatticePolytope,
    face: &Face,
) -> Result<(Vec<IntVector>, Vec<IntVector>)> {
    match face.dim {
        1 => {
            let vs = face_vertex_coords(p, face);
            let len = edge_len(p, face)?;
            let step: IntVector = vec_sub(&vs[1], &vs[0])
                .iter()
                .map(|x| x / BigInt::from(len))
                .collect();
            let mut interior = Vec::new();
            for t in 1..len {
                let pt: IntVector = vs[0]
                    .iter()
                    .zip(&step)
                    .map(|(a, s)| a + s * BigInt::from(t))
                    .collect();
                interior.push(pt);
            }
            interior.sort();
            let mut boundary = vs;
            boundary.sort();
            Ok((interior, boundary))
        }
        2 => {
            let (base, basis, mapped) = two_face_chart(p, face)?;
            let cycle = hull_2d(&mapped);
            let xs: Vec<&BigInt> = mapped.iter().map(|(x, _)| x).collect();
            let ys: Vec<&BigInt> = mapped.iter().map(|(_, y)| y).collect();
            let (xmin, xmax) = (xs.iter().min().unwrap(), xs.iter().max().unwrap());
            let (ymin, ymax) = (ys.iter().min().unwrap(), ys.iter().max().unwrap());

            let mut interior = Vec::new();
            let mut boundary = Vec::new();
            let mut x = (*xmin).clone();
            while &x <= xmax {
                let mut y = (*ymin).clone();
                while &y <= ymax {
                    let z = (x.clone(), y.clone());
                    let mut inside = true;
                    let mut on_edge = false;
                    for i in 0..cycle.len() {
                        let a = &cycle[i];
                        let b = &cycle[(i + 1) % cycle.len()];
                        let c = cross(a, b, &z);
                        if c.is_negative() {
                            inside = false;
                            break;
                        }
                        if c.is_zero() {
                            on_edge = true;
                        }
                    }
                    if inside {
                        let ambient: IntVector = (0..p.dim())
                            .map(|k| &base[k] + &x * basis.at(0, k) + &y * basis.at(1, k))
                            .collect();
                        if on_edge {
                            boundary.push(ambient);
                        } else {
                            interior.push(ambient);
                        }
                    }
                    y += 1;
                }
                x += 1;
            }
            interior.sort();
            boundary.sort();
            Ok((interior, boundary))
        }
        dim => Err(Error::UnsupportedFaceDimension { dim }),
    }
}

/// Point and area counts of a 2-face.
///
/// `s0` and `b` come from exact enumeration, `s2` from the shoelace
/// formula in lattice coordinates. The two routes are tied together by
/// Pick's theorem, which is checked and turned into an error on mismatch
/// since it can only fail through an implementation bug.
pub fn face_s_counts(p: &LatticePolytope, face: &Face) -> Result<TwoFaceCounts> {
    if face.dim != 2 {
        return Err(Error::UnsupportedFaceDimension { dim: face.dim });
    }
    let (interior, bd) = lattice_points_of_face(p, face)?;
    let (_, _, mapped) = two_face_chart(p, face)?;
    let cycle = hull_2d(&mapped);
    let mut doubled = BigInt::zero();
    for i in 0..cycle.len() {
        let (x0, y0) = &cycle[i];
        let (x1, y1) = &cycle[(i + 1) % cycle.len()];
        doubled += x0 * y1 - x1 * y0;
    }
    let s2 = doubled.to_u64().ok_or_else(|| {
        Error::InternalInconsistency("2-face area is negative or oversized".into())
    })?;
    let s0 = interior.len() as u64;
    let b = bd.len() as u64;
    if s2 + 2 != 2 * s0 + b {
        return Err(Error::InternalInconsistency(format!(
            "area {s2} disagrees with point counts (s0={s0}, b={b})"
        )));
    }
    Ok(TwoFaceCounts { s0, s1: s0 + s2 - 1, s2, b })
}

/// Invariants of an edge or 2-face, dispatched on dimension.
pub fn face_invariants(p: &LatticePolytope, face: &Face) -> Result<FaceInvariants> {
    match face.dim {
        1 => Ok(FaceInvariants::Edge { face_id: face.id, len: edge_len(p, face)? }),
        2 => Ok(FaceInvariants::TwoFace { face_id: face.id, counts: face_s_counts(p, face)? }),
        dim => Err(Error::UnsupportedFaceDimension { dim }),
    }
}
