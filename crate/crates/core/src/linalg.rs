//! Exact integer linear algebra on small dense matrices.
//!
//! Everything here is exact: entries are arbitrary-precision integers and
//! no floating point is used anywhere. The workhorses are fraction-free
//! rank computation, Hermite normal form with a unimodular transform, and
//! the saturated-basis routine built on top of them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A point or direction vector with exact integer coordinates.
pub type IntVector = Vec<BigInt>;

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds a matrix from a list of equally long rows.
    ///
    /// # Panics
    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: &[IntVector]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "all matrix rows must have equal length");
            data.extend(row.iter().cloned());
        }
        IntMatrix { rows: nrows, cols: ncols, data }
    }

    /// Builds a matrix from i64 literals; convenient in tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let converted: Vec<IntVector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(&converted)
    }

    /// The zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    /// The identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }

    /// Copies row `r` out as a vector.
    pub fn row(&self, r: usize) -> IntVector {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    /// All rows as vectors.
    pub fn to_rows(&self) -> Vec<IntVector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// row[dst] -= q * row[src]
    fn submul_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let delta = q * self.at(src, c);
            *self.at_mut(dst, c) -= delta;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.at(r, c).clone();
            *self.at_mut(r, c) = v;
        }
    }
}

/// Exact dot product of two equally long vectors.
pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len(), "dot product needs equal lengths");
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

/// Componentwise difference `a - b`.
pub fn vec_sub(a: &[BigInt], b: &[BigInt]) -> IntVector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Gcd of the absolute values of the entries; 0 for the zero vector.
pub fn gcd_content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    g
}

/// Divides a nonzero vector by its content, making it primitive.
pub fn make_primitive(v: &[BigInt]) -> IntVector {
    let g = gcd_content(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Rank over the rationals, computed by fraction-free (Bareiss) elimination.
///
/// Exact for any shape; the empty matrix has rank 0.
pub fn rank_exact(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // Smallest nonzero pivot keeps intermediate entries modest.
        let pivot = (rank..rows)
            .filter(|&i| !a.at(i, col).is_zero())
            .min_by_key(|&i| a.at(i, col).abs());
        let Some(p) = pivot else { continue };
        a.swap_rows(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = a.at(rank, col) * a.at(i, j) - a.at(i, col) * a.at(rank, j);
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                *a.at_mut(i, j) = num / &prev;
            }
            *a.at_mut(i, col) = BigInt::zero();
        }
        prev = a.at(rank, col).clone();
        rank += 1;
    }
    rank
}

/// Row-style Hermite normal form together with its transform.
///
/// Returns `(h, u)` with `u * m = h`, `u` unimodular, `h` in row echelon
/// form with positive pivots and reduced entries above each pivot. Zero
/// rows sit at the bottom.
pub fn hnf_with_transform(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let (rows, cols) = (h.rows, h.cols);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclidean reduction until at most one nonzero entry remains at
        // or below row r in this column.
        loop {
            let mut nonzero: Vec<usize> =
                (r..rows).filter(|&i| !h.at(i, c).is_zero()).collect();
            match nonzero.len() {
                0 => break,
                1 => {
                    let i = nonzero[0];
                    h.swap_rows(r, i);
                    u.swap_rows(r, i);
                    break;
                }
                _ => {
                    nonzero.sort_by_key(|&i| h.at(i, c).abs());
                    let p = nonzero[0];
                    h.swap_rows(r, p);
                    u.swap_rows(r, p);
                    for &i in &nonzero[1..] {
                        let i = if i == r { p } else { i };
                        let q = h.at(i, c) / h.at(r, c);
                        h.submul_row(i, r, &q);
                        u.submul_row(i, r, &q);
                    }
                }
            }
        }
        if h.at(r, c).is_zero() {
            continue;
        }
        if h.at(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..r {
            let q = h.at(i, c).div_floor(h.at(r, c));
            h.submul_row(i, r, &q);
            u.submul_row(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Basis of the right kernel `{x : m x = 0}` as matrix rows.
///
/// The kernel of an integer matrix is saturated, so the rows generate all
/// integer solutions.
pub fn right_kernel(m: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf_with_transform(&m.transpose());
    let mut rows = Vec::new();
    for i in 0..h.rows {
        if (0..h.cols).all(|c| h.at(i, c).is_zero()) {
            rows.push(u.row(i));
        }
    }
    if rows.is_empty() {
        IntMatrix::zero(0, m.cols())
    } else {
        IntMatrix::from_rows(&rows)
    }
}

/// Basis of the saturation of the integer span of the input vectors.
///
/// The result spans `span_Q(input) ∩ Z^n`; its row count equals the rank
/// of the input. Rows are returned in Hermite normal form, so the basis is
/// canonical. Empty input yields an empty matrix.
pub fn hermite_basis(vectors: &[IntVector]) -> Result<IntMatrix> {
    if vectors.is_empty() {
        return Ok(IntMatrix::zero(0, 0));
    }
    let n = vectors[0].len();
    for v in vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, actual: v.len() });
        }
    }
    let a = IntMatrix::from_rows(vectors);
    // Saturation = the double orthogonal complement taken inside Z^n.
    let complement = right_kernel(&a);
    let basis = right_kernel(&complement);
    let (h, _) = hnf_with_transform(&basis);
    let nonzero: Vec<IntVector> = (0..h.rows())
        .map(|r| h.row(r))
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect();
    if nonzero.is_empty() {
        Ok(IntMatrix::zero(0, n))
    } else {
        Ok(IntMatrix::from_rows(&nonzero))
    }
}

/// Writes `w` as an integer combination of the rows of `basis`.
///
/// Returns `None` if no integer solution exists. Solving goes through the
/// Hermite form of the basis, so exactness of every division is checked
/// rather than assumed.
pub fn express_in_basis(basis: &IntMatrix, w: &[BigInt]) -> Option<IntVector> {
    assert_eq!(basis.cols(), w.len(), "vector length must match basis width");
    let k = basis.rows();
    if k == 0 {
        return if w.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None };
    }
    let (h, u) = hnf_with_transform(basis);
    // Solve y * h = w front to back along the pivot columns.
    let mut pivots = Vec::new();
    for i in 0..h.rows() {
        if let Some(c) = (0..h.cols()).find(|&c| !h.at(i, c).is_zero()) {
            pivots.push((i, c));
        }
    }
    let mut y = vec![BigInt::zero(); k];
    for &(i, c) in &pivots {
        let mut acc = w[c].clone();
        for j in 0..i {
            acc -= &y[j] * h.at(j, c);
        }
        let (q, rem) = acc.div_rem(h.at(i, c));
        if !rem.is_zero() {
            return None;
        }
        y[i] = q;
    }
    // Verify the full equation: pivot columns alone do not prove membership.
    for c in 0..h.cols() {
        let mut acc = BigInt::zero();
        for i in 0..k {
            acc += &y[i] * h.at(i, c);
        }
        if acc != w[c] {
            return None;
        }
    }
    // y * h = w and u * basis = h, so (y * u) * basis = w.
    let mut coeffs = vec![BigInt::zero(); k];
    for (j, coeff) in coeffs.iter_mut().enumerate() {
        for i in 0..k {
            *coeff += &y[i] * u.at(i, j);
        }
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// Independent rank oracle: Gaussian elimination over the rationals.
    fn rank_rational(m: &IntMatrix) -> usize {
        let mut a: Vec<Vec<BigRational>> = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| BigRational::from(m.at(r, c).clone())).collect())
            .collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            if rank == m.rows() {
                break;
            }
            let Some(p) = (rank..m.rows()).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for i in rank + 1..m.rows() {
                let f = &a[i][col] / &a[rank][col];
                for j in col..m.cols() {
                    let delta = &f * &a[rank][j];
                    a[i][j] -= delta;
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn rank_of_repeated_row_is_one() {
        let m = IntMatrix::from_i64(&[&[1, -1, 1], &[1, -1, 1]]);
        assert_eq!(rank_exact(&m), 1);
    }

    #[test]
    fn rank_of_identity() {
        assert_eq!(rank_exact(&IntMatrix::identity(3)), 3);
    }

    #[test]
    fn rank_of_proportional_rows() {
        let m = IntMatrix::from_i64(&[&[2, 4], &[3, 6], &[5, 10]]);
        assert_eq!(rank_exact(&m), 1);
    }

    #[test]
    fn rank_of_empty_matrix_is_zero() {
        assert_eq!(rank_exact(&IntMatrix::zero(0, 0)), 0);
        assert_eq!(rank_exact(&IntMatrix::zero(0, 5)), 0);
        assert_eq!(rank_exact(&IntMatrix::zero(3, 0)), 0);
    }

    #[test]
    fn hnf_transform_is_consistent() {
        let m = IntMatrix::from_i64(&[&[4, 6, 2], &[6, 9, 3], &[2, 4, 8]]);
        let (h, u) = hnf_with_transform(&m);
        // u * m == h
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let mut acc = BigInt::zero();
                for k in 0..m.rows() {
                    acc += u.at(r, k) * m.at(k, c);
                }
                assert_eq!(&acc, h.at(r, c));
            }
        }
        // u is unimodular: its rank is full and its determinant divides 1.
        assert_eq!(rank_exact(&u), 3);
    }

    #[test]
    fn saturation_of_doubled_generator() {
        let b = hermite_basis(&[vec![bi(2), bi(0), bi(0)]]).unwrap();
        assert_eq!(b.rows(), 1);
        assert_eq!(b.row(0), vec![bi(1), bi(0), bi(0)]);
    }

    #[test]
    fn saturation_of_standard_basis_is_identity() {
        let b = hermite_basis(&[vec![bi(1), bi(0)], vec![bi(0), bi(1)]]).unwrap();
        assert_eq!(b, IntMatrix::identity(2));
    }

    #[test]
    fn saturation_of_empty_input_is_empty() {
        let b = hermite_basis(&[]).unwrap();
        assert_eq!(b.rows(), 0);
    }

    /// Brute-force oracle for the saturation of a small span: every lattice
    /// point of the rational span inside a box, found by membership rank.
    fn span_points_in_box(vectors: &[IntVector], radius: i64) -> Vec<IntVector> {
        let n = vectors[0].len();
        let base_rank = rank_rational(&IntMatrix::from_rows(vectors));
        let mut found = Vec::new();
        let mut point = vec![-radius; n];
        loop {
            let candidate: IntVector = point.iter().map(|&x| bi(x)).collect();
            let mut stacked = vectors.to_vec();
            stacked.push(candidate.clone());
            if rank_rational(&IntMatrix::from_rows(&stacked)) == base_rank {
                found.push(candidate);
            }
            // Odometer increment over the box.
            let mut i = 0;
            loop {
                if i == n {
                    return found;
                }
                point[i] += 1;
                if point[i] <= radius {
                    break;
                }
                point[i] = -radius;
                i += 1;
            }
        }
    }

    #[test]
    fn saturated_basis_spans_all_lattice_points_of_the_span() {
        let input = vec![
            vec![bi(-1), bi(1), bi(0), bi(0)],
            vec![bi(-2), bi(-1), bi(-1), bi(-1)],
        ];
        let basis = hermite_basis(&input).unwrap();
        assert_eq!(basis.rows(), 2);
        // Both inputs lie in the integer span of the basis.
        for v in &input {
            assert!(express_in_basis(&basis, v).is_some());
        }
        // Every lattice point of the rational span near the origin lies in
        // the integer span of the basis, so the basis is saturated.
        for p in span_points_in_box(&input, 3) {
            assert!(
                express_in_basis(&basis, &p).is_some(),
                "point {p:?} not in integer span"
            );
        }
        // Index one: the gcd of the 2x2 minors of the basis is 1.
        let mut minor_gcd = BigInt::zero();
        for c1 in 0..4 {
            for c2 in c1 + 1..4 {
                let det = basis.at(0, c1) * basis.at(1, c2) - basis.at(0, c2) * basis.at(1, c1);
                minor_gcd = minor_gcd.gcd(&det);
            }
        }
        assert_eq!(minor_gcd, bi(1));
    }

    #[test]
    fn gcd_content_basics() {
        assert_eq!(gcd_content(&[bi(6), bi(-4)]), bi(2));
        assert_eq!(gcd_content(&[bi(0), bi(0), bi(0)]), bi(0));
        assert_eq!(gcd_content(&[bi(7)]), bi(7));
        assert_eq!(gcd_content(&[bi(-3), bi(5)]), bi(1));
    }

    #[test]
    fn express_in_basis_detects_non_members() {
        let basis = IntMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        assert!(express_in_basis(&basis, &[bi(4), bi(3)]).is_some());
        assert!(express_in_basis(&basis, &[bi(3), bi(0)]).is_none());
    }

    prop_compose! {
        fn small_matrix()(rows in 1usize..5, cols in 1usize..5)
            (entries in prop::collection::vec(-6i64..=6, rows * cols),
             rows in Just(rows), cols in Just(cols))
            -> IntMatrix {
            let r: Vec<IntVector> = (0..rows)
                .map(|i| entries[i * cols..(i + 1) * cols].iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            IntMatrix::from_rows(&r)
        }
    }

    proptest! {
        #[test]
        fn rank_matches_rational_oracle(m in small_matrix()) {
            prop_assert_eq!(rank_exact(&m), rank_rational(&m));
        }

        #[test]
        fn rank_is_transpose_invariant(m in small_matrix()) {
            prop_assert_eq!(rank_exact(&m), rank_exact(&m.transpose()));
        }

        #[test]
        fn rank_is_invariant_under_row_scaling(m in small_matrix(), k in 1i64..=4) {
            let mut scaled = m.clone();
            for c in 0..scaled.cols() {
                let v = scaled.at(0, c) * BigInt::from(k);
                *scaled.at_mut(0, c) = v;
            }
            prop_assert_eq!(rank_exact(&m), rank_exact(&scaled));
        }

        #[test]
        fn gcd_content_is_homogeneous(v in prop::collection::vec(-9i64..=9, 1..6), k in 1i64..=5) {
            let orig: IntVector = v.iter().map(|&x| BigInt::from(x)).collect();
            let scaled: IntVector = v.iter().map(|&x| BigInt::from(x * k)).collect();
            prop_assert_eq!(gcd_content(&scaled), gcd_content(&orig) * BigInt::from(k));
        }

        #[test]
        fn hermite_basis_row_count_equals_rank(m in small_matrix()) {
            let basis = hermite_basis(&m.to_rows()).unwrap();
            prop_assert_eq!(basis.rows(), rank_exact(&m));
        }

        #[test]
        fn hermite_basis_contains_inputs(m in small_matrix()) {
            let basis = hermite_basis(&m.to_rows()).unwrap();
            for r in 0..m.rows() {
                prop_assert!(express_in_basis(&basis, &m.row(r)).is_some());
            }
        }
    }
}
