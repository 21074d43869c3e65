//! Full-dimensional lattice polytopes in ambient dimension 2, 3, or 4.
//!
//! A polytope is stored as its exact vertex set together with the complete
//! irredundant list of facet inequalities `<normal, x> >= level` with
//! primitive inward normals. Construction from an arbitrary point set does
//! exhaustive exact hull computation, which is entirely adequate at the
//! scale of reflexive polytopes and keeps every step verifiable.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{dot, make_primitive, rank_exact, vec_sub, IntMatrix, IntVector};

/// One facet inequality `<normal, x> >= level`, tight on `vertex_ids`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// Primitive inward normal.
    pub normal: IntVector,
    /// Value of the normal on the facet.
    pub level: BigInt,
    /// Sorted ids of the vertices lying on the facet.
    pub vertex_ids: Vec<usize>,
}

/// A nonempty proper face of a polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Position in the canonical face list.
    pub id: usize,
    /// Affine dimension of the face.
    pub dim: usize,
    /// Sorted ids of the vertices of the face.
    pub vertex_ids: Vec<usize>,
    /// Sorted ids of all facets containing the face.
    pub containing_facet_ids: Vec<usize>,
}

/// A full-dimensional lattice polytope, immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<IntVector>,
    facets: Vec<Facet>,
}

/// Determinant of a square matrix of size at most 3, by direct expansion.
fn small_det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        3 => {
            let a = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]);
            let b = &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0]);
            let c = &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
            a - b + c
        }
        n => unreachable!("determinant of size {n} not needed"),
    }
}

/// Normal vector of the hyperplane spanned by `diffs` (d-1 difference
/// vectors in dimension d), via cofactor expansion. `None` when the
/// differences do not span a hyperplane.
fn hyperplane_normal(diffs: &[IntVector], dim: usize) -> Option<IntVector> {
    debug_assert_eq!(diffs.len(), dim - 1);
    let mut normal = Vec::with_capacity(dim);
    for skip in 0..dim {
        let minor: Vec<Vec<BigInt>> = diffs
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let mut d = small_det(&minor);
        if skip % 2 == 1 {
            d = -d;
        }
        normal.push(d);
    }
    if normal.iter().all(Zero::is_zero) {
        None
    } else {
        Some(normal)
    }
}

impl LatticePolytope {
    /// Builds the convex hull of the given lattice points.
    ///
    /// The points must span the full ambient space; redundant (non-vertex)
    /// points are dropped. Vertices and facets come out in a canonical
    /// sorted order, so equal polytopes compare equal structurally.
    ///
    /// # Errors
    /// `DimensionOutOfRange` unless the ambient dimension is 2, 3, or 4;
    /// `DimensionMismatch` for ragged input; `NotFullDimensional` when the
    /// affine hull is a proper subspace.
    pub fn from_vertices(points: Vec<IntVector>) -> Result<Self> {
        let dim = points.first().map_or(0, Vec::len);
        if !(2..=4).contains(&dim) {
            return Err(Error::DimensionOutOfRange { dim });
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, actual: p.len() });
            }
        }
        let mut points = points;
        points.sort();
        points.dedup();

        let diffs: Vec<IntVector> =
            points[1..].iter().map(|p| vec_sub(p, &points[0])).collect();
        let affine = rank_exact(&IntMatrix::from_rows(&diffs));
        if affine != dim {
            return Err(Error::NotFullDimensional { ambient: dim, affine });
        }

        // Every facet hyperplane passes through dim affinely independent
        // input points, so enumerating all dim-subsets finds every facet.
        let mut seen: BTreeSet<(IntVector, BigInt)> = BTreeSet::new();
        for subset in (0..points.len()).combinations(dim) {
            let base = &points[subset[0]];
            let local: Vec<IntVector> =
                subset[1..].iter().map(|&i| vec_sub(&points[i], base)).collect();
            let Some(raw) = hyperplane_normal(&local, dim) else { continue };
            let mut normal = make_primitive(&raw);
            let mut level = dot(&normal, base);
            let mut saw_above = false;
            let mut saw_below = false;
            for p in &points {
                let v = dot(&normal, p);
                if v > level {
                    saw_above = true;
                } else if v < level {
                    saw_below = true;
                }
                if saw_above && saw_below {
                    break;
                }
            }
            if saw_above && saw_below {
                continue;
            }
            if saw_below {
                normal = normal.iter().map(|x| -x).collect();
                level = -level;
            }
            seen.insert((normal, level));
        }

        // A point is a vertex exactly when its tight facet normals span
        // the ambient space.
        let mut vertices: Vec<IntVector> = Vec::new();
        for p in &points {
            let tight: Vec<IntVector> = seen
                .iter()
                .filter(|(n, l)| dot(n, p) == *l)
                .map(|(n, _)| n.clone())
                .collect();
            if rank_exact(&IntMatrix::from_rows(&tight)) == dim {
                vertices.push(p.clone());
            }
        }
        vertices.sort();

        let facets: Vec<Facet> = seen
            .into_iter()
            .map(|(normal, level)| {
                let vertex_ids: Vec<usize> = vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| dot(&normal, v) == level)
                    .map(|(i, _)| i)
                    .collect();
                Facet { normal, level, vertex_ids }
            })
            .collect();

        for f in &facets {
            if f.vertex_ids.len() < dim {
                return Err(Error::InternalInconsistency(format!(
                    "facet with only {} vertices in dimension {dim}",
                    f.vertex_ids.len()
                )));
            }
        }

        Ok(LatticePolytope { dim, vertices, facets })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[IntVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// A polytope is reflexive when the origin is interior and every facet
    /// has its primitive normal at level -1.
    pub fn is_reflexive(&self) -> bool {
        self.facets.iter().all(|f| f.level == BigInt::from(-1))
    }

    /// The polar dual `{y : <y, x> >= -1 for all x}` as a lattice polytope.
    ///
    /// Vertices of the dual are the facet normals; facets of the dual come
    /// from the vertices. No hull computation is needed.
    ///
    /// # Errors
    /// `OriginNotInterior` when some facet level is nonnegative;
    /// `NotReflexive` when the dual is not a lattice polytope.
    pub fn polar_dual(&self) -> Result<Self> {
        if self.facets.iter().any(|f| !f.level.is_negative()) {
            return Err(Error::OriginNotInterior);
        }
        if !self.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        let mut dual_vertices: Vec<IntVector> =
            self.facets.iter().map(|f| f.normal.clone()).collect();
        dual_vertices.sort();
        let minus_one = BigInt::from(-1);
        let facets: Vec<Facet> = self
            .vertices
            .iter()
            .map(|v| {
                let vertex_ids: Vec<usize> = dual_vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, n)| dot(n, v) == minus_one)
                    .map(|(i, _)| i)
                    .collect();
                Facet { normal: v.clone(), level: minus_one.clone(), vertex_ids }
            })
            .collect();
        Ok(LatticePolytope { dim: self.dim, vertices: dual_vertices, facets })
    }

    /// All nonempty proper faces, sorted by dimension and then by vertex
    /// ids, with `id` equal to the position in the returned list.
    ///
    /// Faces are the intersection closure of the facet vertex sets; the
    /// dimension of each face is the affine rank of its vertices.
    pub fn face_lattice(&self) -> Vec<Face> {
        let mut sets: BTreeSet<Vec<usize>> = self
            .facets
            .iter()
            .map(|f| f.vertex_ids.clone())
            .collect();
        loop {
            let snapshot: Vec<Vec<usize>> = sets.iter().cloned().collect();
            let before = sets.len();
            for i in 0..snapshot.len() {
                for j in i + 1..snapshot.len() {
                    let inter = intersect_sorted(&snapshot[i], &snapshot[j]);
                    if !inter.is_empty() {
                        sets.insert(inter);
                    }
                }
            }
            if sets.len() == before {
                break;
            }
        }

        let mut faces: Vec<(usize, Vec<usize>)> = sets
            .into_iter()
            .map(|vertex_ids| {
                let d = self.affine_dim_of(&vertex_ids);
                (d, vertex_ids)
            })
            .collect();
        faces.sort();
        faces
            .into_iter()
            .enumerate()
            .map(|(id, (dim, vertex_ids))| {
                let containing_facet_ids: Vec<usize> = self
                    .facets
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| is_subset_sorted(&vertex_ids, &f.vertex_ids))
                    .map(|(i, _)| i)
                    .collect();
                Face { id, dim, vertex_ids, containing_facet_ids }
            })
            .collect()
    }

    /// Affine dimension of the subset of vertices with the given ids.
    fn affine_dim_of(&self, vertex_ids: &[usize]) -> usize {
        if vertex_ids.len() <= 1 {
            return 0;
        }
        let base = &self.vertices[vertex_ids[0]];
        let diffs: Vec<IntVector> = vertex_ids[1..]
            .iter()
            .map(|&i| vec_sub(&self.vertices[i], base))
            .collect();
        rank_exact(&IntMatrix::from_rows(&diffs))
    }

    /// Counts of faces by dimension, from 0 to dim-1.
    pub fn f_vector(&self) -> Vec<u64> {
        let faces = self.face_lattice();
        let mut f = vec![0u64; self.dim];
        for face in &faces {
            f[face.dim] += 1;
        }
        f
    }
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn is_subset_sorted(small: &[usize], big: &[usize]) -> bool {
    let mut j = 0;
    for &x in small {
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// A reflexive polytope bundled with its polar dual and both face
/// lattices, with exact face-to-dual-face lookup.
#[derive(Debug, Clone)]
pub struct ReflexivePair {
    primal: LatticePolytope,
    dual: LatticePolytope,
    primal_faces: Vec<Face>,
    dual_faces: Vec<Face>,
    facet_to_dual_vertex: Vec<usize>,
    dual_facet_to_primal_vertex: Vec<usize>,
    primal_face_by_vertices: HashMap<Vec<usize>, usize>,
    dual_face_by_vertices: HashMap<Vec<usize>, usize>,
}

impl ReflexivePair {
    /// # Errors
    /// `NotReflexive` or `OriginNotInterior` when the input has no lattice
    /// polar dual.
    pub fn new(primal: LatticePolytope) -> Result<Self> {
        let dual = primal.polar_dual()?;
        let primal_faces = primal.face_lattice();
        let dual_faces = dual.face_lattice();

        let dual_vertex_pos: HashMap<&IntVector, usize> =
            dual.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let facet_to_dual_vertex = primal
            .facets
            .iter()
            .map(|f| dual_vertex_pos[&f.normal])
            .collect();
        let primal_vertex_pos: HashMap<&IntVector, usize> =
            primal.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let dual_facet_to_primal_vertex = dual
            .facets
            .iter()
            .map(|f| primal_vertex_pos[&f.normal])
            .collect();

        let primal_face_by_vertices =
            primal_faces.iter().map(|f| (f.vertex_ids.clone(), f.id)).collect();
        let dual_face_by_vertices =
            dual_faces.iter().map(|f| (f.vertex_ids.clone(), f.id)).collect();

        Ok(ReflexivePair {
            primal,
            dual,
            primal_faces,
            dual_faces,
            facet_to_dual_vertex,
            dual_facet_to_primal_vertex,
            primal_face_by_vertices,
            dual_face_by_vertices,
        })
    }

    pub fn primal(&self) -> &LatticePolytope {
        &self.primal
    }

    pub fn dual(&self) -> &LatticePolytope {
        &self.dual
    }

    pub fn primal_faces(&self) -> &[Face] {
        &self.primal_faces
    }

    pub fn dual_faces(&self) -> &[Face] {
        &self.dual_faces
    }

    /// The face of the dual polytope dual to a face of the primal: its
    /// vertices are the normals of the facets containing the given face.
    pub fn dual_face(&self, face: &Face) -> Result<&Face> {
        let mut ids: Vec<usize> = face
            .containing_facet_ids
            .iter()
            .map(|&j| self.facet_to_dual_vertex[j])
            .collect();
        ids.sort_unstable();
        let idx = self.dual_face_by_vertices.get(&ids).ok_or_else(|| {
            Error::InternalInconsistency("dual vertex set is not a face of the dual".into())
        })?;
        Ok(&self.dual_faces[*idx])
    }

    /// The inverse direction: the face of the primal dual to a face of the
    /// dual polytope.
    pub fn primal_face_of_dual(&self, face: &Face) -> Result<&Face> {
        let mut ids: Vec<usize> = face
            .containing_facet_ids
            .iter()
            .map(|&j| self.dual_facet_to_primal_vertex[j])
            .collect();
        ids.sort_unstable();
        let idx = self.primal_face_by_vertices.get(&ids).ok_or_else(|| {
            Error::InternalInconsistency("primal vertex set is not a face of the primal".into())
        })?;
        Ok(&self.primal_faces[*idx])
    }
}

/// Convenience form of face duality for one-off queries; computes the
/// dual and both face lattices internally.
pub fn dual_face(p: &LatticePolytope, face: &Face) -> Result<Face> {
    let pair = ReflexivePair::new(p.clone())?;
    pair.dual_face(face).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v4(a: i64, b: i64, c: i64, d: i64) -> IntVector {
        vec![BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d)]
    }

    fn small_simplex() -> LatticePolytope {
        LatticePolytope::from_vertices(vec![
            v4(1, 0, 0, 0),
            v4(0, 1, 0, 0),
            v4(0, 0, 1, 0),
            v4(0, 0, 0, 1),
            v4(-1, -1, -1, -1),
        ])
        .unwrap()
    }

    fn big_simplex() -> LatticePolytope {
        LatticePolytope::from_vertices(vec![
            v4(4, -1, -1, -1),
            v4(-1, 4, -1, -1),
            v4(-1, -1, 4, -1),
            v4(-1, -1, -1, 4),
            v4(-1, -1, -1, -1),
        ])
        .unwrap()
    }

    fn cube() -> LatticePolytope {
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
        LatticePolytope::from_vertices(pts).unwrap()
    }

    fn cross() -> LatticePolytope {
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
        .unwrap()
    }

    #[test]
    fn simplex_has_five_facets() {
        let p = small_simplex();
        assert_eq!(p.vertices().len(), 5);
        assert_eq!(p.facets().len(), 5);
        assert!(p.is_reflexive());
    }

    /// Independent oracle for the dual vertices of the standard simplex:
    /// on each facet's vertex set, <w, v> = -1 has the unique solutions
    /// written out here, and all are integral.
    #[test]
    fn dual_of_small_simplex_is_degree_five_simplex() {
        let dual = small_simplex().polar_dual().unwrap();
        let mut expected = vec![
            v4(-1, -1, -1, -1),
            v4(4, -1, -1, -1),
            v4(-1, 4, -1, -1),
            v4(-1, -1, 4, -1),
            v4(-1, -1, -1, 4),
        ];
        expected.sort();
        assert_eq!(dual.vertices(), &expected[..]);
    }

    #[test]
    fn dual_of_cross_is_cube() {
        let dual = cross().polar_dual().unwrap();
        assert_eq!(dual.vertices().len(), 16);
        assert_eq!(dual, cube());
    }

    #[test]
    fn polar_duality_is_an_involution() {
        for p in [small_simplex(), big_simplex(), cube(), cross()] {
            let back = p.polar_dual().unwrap().polar_dual().unwrap();
            assert_eq!(back, p);
        }
    }

    #[test]
    fn interior_points_are_dropped() {
        let mut pts: Vec<IntVector> = cube().vertices().to_vec();
        pts.push(v4(0, 0, 0, 0));
        pts.push(v4(1, 1, 1, 0));
        let p = LatticePolytope::from_vertices(pts).unwrap();
        assert_eq!(p, cube());
    }

    #[test]
    fn scaled_cross_is_not_reflexive() {
        let pts: Vec<IntVector> = cross()
            .vertices()
            .iter()
            .map(|v| v.iter().map(|x| x * 2).collect())
            .collect();
        let p = LatticePolytope::from_vertices(pts).unwrap();
        assert!(!p.is_reflexive());
        assert_eq!(p.polar_dual().unwrap_err(), Error::NotReflexive);
    }

    #[test]
    fn translated_cube_has_no_dual() {
        let pts: Vec<IntVector> = cube()
            .vertices()
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w[0] += 3;
                w
            })
            .collect();
        let p = LatticePolytope::from_vertices(pts).unwrap();
        assert_eq!(p.polar_dual().unwrap_err(), Error::OriginNotInterior);
    }

    #[test]
    fn too_few_points_are_not_full_dimensional() {
        let err = LatticePolytope::from_vertices(vec![
            v4(1, 0, 0, 0),
            v4(0, 1, 0, 0),
            v4(0, 0, 1, 0),
        ])
        .unwrap_err();
        assert_eq!(err, Error::NotFullDimensional { ambient: 4, affine: 2 });
    }

    #[test]
    fn dimension_bounds_are_enforced() {
        let err = LatticePolytope::from_vertices(vec![vec![BigInt::from(1)]]).unwrap_err();
        assert_eq!(err, Error::DimensionOutOfRange { dim: 1 });
        let five = vec![BigInt::from(0); 5];
        let err = LatticePolytope::from_vertices(vec![five]).unwrap_err();
        assert_eq!(err, Error::DimensionOutOfRange { dim: 5 });
    }

    #[test]
    fn f_vectors_of_standard_polytopes() {
        assert_eq!(small_simplex().f_vector(), vec![5, 10, 10, 5]);
        assert_eq!(cube().f_vector(), vec![16, 32, 24, 8]);
        assert_eq!(cross().f_vector(), vec![8, 24, 32, 16]);
    }

    #[test]
    fn every_vertex_on_enough_facets_and_vice_versa() {
        for p in [small_simplex(), cube(), cross()] {
            for f in p.facets() {
                assert!(f.vertex_ids.len() >= p.dim());
            }
            for (i, _) in p.vertices().iter().enumerate() {
                let count = p.facets().iter().filter(|f| f.vertex_ids.contains(&i)).count();
                assert!(count >= p.dim());
            }
        }
    }

    #[test]
    fn dual_face_of_simplex_edge_is_a_triangle() {
        let pair = ReflexivePair::new(big_simplex()).unwrap();
        let a = v4(-1, -1, -1, -1);
        let b = v4(4, -1, -1, -1);
        let edge = pair
            .primal_faces()
            .iter()
            .find(|f| {
                f.dim == 1 && {
                    let vs: Vec<&IntVector> =
                        f.vertex_ids.iter().map(|&i| &pair.primal().vertices()[i]).collect();
                    vs.contains(&&a) && vs.contains(&&b)
                }
            })
            .expect("edge exists");
        let dual = pair.dual_face(edge).unwrap();
        assert_eq!(dual.dim, 2);
        let mut coords: Vec<IntVector> = dual
            .vertex_ids
            .iter()
            .map(|&i| pair.dual().vertices()[i].clone())
            .collect();
        coords.sort();
        let mut expected = vec![v4(0, 1, 0, 0), v4(0, 0, 1, 0), v4(0, 0, 0, 1)];
        expected.sort();
        assert_eq!(coords, expected);
    }

    #[test]
    fn face_duality_pairs_dimensions_to_three() {
        for p in [small_simplex(), cube(), cross()] {
            let pair = ReflexivePair::new(p).unwrap();
            for face in pair.primal_faces() {
                let dual = pair.dual_face(face).unwrap();
                assert_eq!(face.dim + dual.dim, 3);
                let back = pair.primal_face_of_dual(dual).unwrap();
                assert_eq!(back.id, face.id);
            }
        }
    }

    #[test]
    fn face_duality_reverses_inclusion() {
        let pair = ReflexivePair::new(cube()).unwrap();
        let faces = pair.primal_faces();
        for f in faces {
            for g in faces {
                let f_in_g = is_subset_sorted(&f.vertex_ids, &g.vertex_ids);
                let df = pair.dual_face(f).unwrap();
                let dg = pair.dual_face(g).unwrap();
                let dg_in_df = is_subset_sorted(&dg.vertex_ids, &df.vertex_ids);
                assert_eq!(f_in_g, dg_in_df);
            }
        }
    }

    #[test]
    fn two_dimensional_polytopes_work() {
        let diamond = LatticePolytope::from_vertices(vec![
            vec![BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(-1), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(-1)],
        ])
        .unwrap();
        assert!(diamond.is_reflexive());
        let square = diamond.polar_dual().unwrap();
        assert_eq!(square.vertices().len(), 4);
        assert_eq!(square.f_vector(), vec![4, 4]);
        assert_eq!(square.polar_dual().unwrap(), diamond);
    }
}
