use alloc::vec;
use alloc::vec::Vec;

use crate::scalars::{Field, ScalarError};

/// Dense row-major matrix over a [`Field`]. Square instances are the
/// operators `A`, `A*`, `E_i`, `E*_i` acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<E>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows));
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![f.zero(); rows * cols] }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { f.one() } else { f.zero() })
    }

    /// `c·I`.
    pub fn scalar<F: Field<Elem = E>>(f: &F, n: usize, c: &E) -> Self {
        Matrix::from_fn(n, n, |r, k| if r == k { c.clone() } else { f.zero() })
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    pub fn is_identity<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c { f.is_one(x) } else { f.is_zero(x) }
                })
            })
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self − c·I`.
    pub fn shift<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        assert!(self.is_square());
        let mut out = self.clone();
        for i in 0..self.rows {
            let v = f.sub(out.get(i, i), c);
            out.set(i, i, v);
        }
        out
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let t = other.transpose();
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            let row = self.row(r);
            for c in 0..other.cols {
                data.push(f.dot(row.iter().zip(t.row(c))));
            }
        }
        Matrix { rows: self.rows, cols: other.cols, data }
    }

    pub fn pow<F: Field<Elem = E>>(&self, f: &F, k: u32) -> Self {
        let mut acc = Matrix::identity(f, self.rows);
        for _ in 0..k {
            acc = acc.mul(f, self);
        }
        acc
    }

    pub fn apply<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        (0..self.rows).map(|r| f.dot(self.row(r).iter().zip(v))).collect()
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        Echelon::from_rows(f, self.rows_vec()).rank()
    }

    fn rows_vec(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Nonzero pattern, for cheap repeated application of sparse operators.
    pub fn sparse_columns<F: Field<Elem = E>>(&self, f: &F) -> SparseColumns<E> {
        let cols = (0..self.cols)
            .map(|c| {
                (0..self.rows)
                    .filter(|&r| !f.is_zero(self.get(r, c)))
                    .map(|r| (r, self.get(r, c).clone()))
                    .collect()
            })
            .collect();
        SparseColumns { rows: self.rows, cols }
    }
}

/// Column-compressed copy of a matrix.
#[derive(Debug, Clone)]
pub struct SparseColumns<E> {
    rows: usize,
    cols: Vec<Vec<(usize, E)>>,
}

impl<E: Clone + PartialEq> SparseColumns<E> {
    pub fn apply<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols.len(), v.len());
        let mut out = vec![f.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (r, a) in &self.cols[c] {
                out[*r] = f.add(&out[*r], &f.mul(a, x));
            }
        }
        out
    }
}

/// A subspace held as a reduced row-echelon basis.
///
/// Each basis vector has a 1 at its pivot and 0 at every other pivot, so
/// the coordinates of a member vector are its entries at the pivots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon<E> {
    dim: usize,
    basis: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Echelon<E> {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<F: Field<Elem = E>>(f: &F, rows: Vec<Vec<E>>) -> Self {
        let dim = rows.first().map_or(0, Vec::len);
        let mut e = Echelon::new(dim);
        for r in rows {
            e.insert(f, r);
        }
        e
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` modulo the span.
    pub fn reduce<F: Field<Elem = E>>(&self, f: &F, mut v: Vec<E>) -> Vec<E> {
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, y) in v.iter_mut().zip(b) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        v
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        self.reduce(f, v.to_vec()).iter().all(|x| f.is_zero(x))
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert<F: Field<Elem = E>>(&mut self, f: &F, v: Vec<E>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut v = self.reduce(f, v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]).expect("pivot is nonzero");
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // Keep the basis fully reduced at the new pivot.
        for b in self.basis.iter_mut() {
            if f.is_zero(&b[p]) {
                continue;
            }
            let c = b[p].clone();
            for (x, y) in b.iter_mut().zip(&v) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, v);
        true
    }

    /// Coordinates of a member vector with respect to [`Echelon::basis`].
    pub fn coordinates(&self, v: &[E]) -> Vec<E> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }
}

/// Solves `m · x = rhs` for square invertible `m`.
pub fn solve<F: Field>(
    f: &F,
    m: &Matrix<F::Elem>,
    rhs: &[F::Elem],
) -> Result<Vec<F::Elem>, ScalarError> {
    assert!(m.is_square() && m.rows() == rhs.len());
    let n = m.rows();
    let mut aug: Vec<Vec<F::Elem>> = (0..n)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !f.is_zero(&aug[r][c])).ok_or(ScalarError::DivisionByZero)?;
        aug.swap(c, p);
        let inv = f.inv(&aug[c][c])?;
        for x in aug[c].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for r in 0..n {
            if r != c && !f.is_zero(&aug[r][c]) {
                let k = aug[r][c].clone();
                let pivot_row = aug[c].clone();
                for (x, y) in aug[r].iter_mut().zip(&pivot_row) {
                    *x = f.sub(x, &f.mul(&k, y));
                }
            }
        }
    }
    Ok(aug.into_iter().map(|mut row| row.pop().expect("augmented")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{PrimeField, RationalField};

    fn q_mat(rows: &[&[i64]]) -> Matrix<crate::scalars::Rational> {
        let q = RationalField::default();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q.from_i64(x)).collect()).collect())
    }

    #[test]
    fn product_and_identity() {
        let q = RationalField::default();
        let a = q_mat(&[&[1, 2], &[3, 4]]);
        let b = q_mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&q, &b), q_mat(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.mul(&q, &Matrix::identity(&q, 2)), a);
        assert!(Matrix::identity(&q, 3).is_identity(&q));
        assert_eq!(a.pow(&q, 2), q_mat(&[&[7, 10], &[15, 22]]));
    }

    #[test]
    fn rank_over_fields() {
        let q = RationalField::default();
        assert_eq!(q_mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).rank(&q), 2);
        let f = PrimeField::new(5).unwrap();
        // Determinant 5 vanishes mod 5.
        let m = Matrix::from_rows(vec![
            vec![f.from_i64(1), f.from_i64(2)],
            vec![f.from_i64(3), f.from_i64(11)],
        ]);
        assert_eq!(m.rank(&f), 1);
    }

    #[test]
    fn echelon_coordinates() {
        let q = RationalField::default();
        let v = |xs: &[i64]| xs.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>();
        let mut e = Echelon::new(3);
        assert!(e.insert(&q, v(&[0, 2, 2])));
        assert!(e.insert(&q, v(&[1, 1, 0])));
        assert!(!e.insert(&q, v(&[2, 4, 2])));
        assert_eq!(e.pivots(), &[0, 1]);
        let w = v(&[3, 5, 2]);
        assert!(e.contains(&q, &w));
        let coords = e.coordinates(&w);
        let mut back = vec![q.zero(); 3];
        for (c, b) in coords.iter().zip(e.basis()) {
            for (x, y) in back.iter_mut().zip(b) {
                *x = q.add(x, &q.mul(c, y));
            }
        }
        assert_eq!(back, w);
    }

    #[test]
    fn solve_small_system() {
        let q = RationalField::default();
        let m = q_mat(&[&[2, 1], &[1, 3]]);
        let x = solve(&q, &m, &[q.from_i64(3), q.from_i64(5)]).unwrap();
        assert_eq!(m.apply(&q, &x), vec![q.from_i64(3), q.from_i64(5)]);
    }

    #[test]
    fn sparse_apply_matches_dense() {
        let q = RationalField::default();
        let a = q_mat(&[&[1, 0, 2], &[0, 0, 0], &[0, 5, 1]]);
        let v: Vec<_> = [4, -1, 3].iter().map(|&x| q.from_i64(x)).collect();
        assert_eq!(a.sparse_columns(&q).apply(&q, &v), a.apply(&q, &v));
    }
}
