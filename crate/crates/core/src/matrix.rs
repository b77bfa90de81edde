//! Dense exact matrices over a [`Field`] with deterministic elimination.
//!
//! Pivoting always takes the first nonzero entry in row-major order, so
//! echelon forms, kernel bases and solved systems are byte-stable across
//! runs; every downstream basis choice inherits that determinism.

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug)]
pub struct Mat<F: Field> {
    f: F,
    rows: usize,
    cols: usize,
    a: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Mat<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.a == other.a
    }
}

/// Row echelon data: the reduced matrix, its pivot columns and rank.
pub struct Echelon<F: Field> {
    pub mat: Mat<F>,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

impl<F: Field> Mat<F> {
    pub fn zero(f: &F, rows: usize, cols: usize) -> Self {
        Mat { f: f.clone(), rows, cols, a: vec![f.zero(); rows * cols] }
    }

    pub fn identity(f: &F, n: usize) -> Self {
        let mut m = Self::zero(f, n, n);
        for i in 0..n {
            m.set(i, i, f.one());
        }
        m
    }

    pub fn from_rows(f: &F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        debug_assert!(rows.iter().all(|row| row.len() == c));
        Mat { f: f.clone(), rows: r, cols: c, a: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(f: &F, rows: &[&[i64]]) -> Self {
        Self::from_rows(f, rows.iter().map(|r| r.iter().map(|&v| f.from_i64(v)).collect()).collect())
    }

    pub fn field(&self) -> &F {
        &self.f
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &F::Elem {
        &self.a[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.a[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| self.f.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(&self.f, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let f = &self.f;
        let mut out = Self::zero(f, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let lhs = self.at(r, k);
                if f.is_zero(lhs) {
                    continue;
                }
                for c in 0..rhs.cols {
                    let term = f.mul(lhs, rhs.at(k, c));
                    out.set(r, c, f.add(out.at(r, c), &term));
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Self::zero(&self.f, self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
            for c in 0..rhs.cols {
                out.set(r, self.cols + c, rhs.at(r, c).clone());
            }
        }
        out
    }

    /// The submatrix on the given row and column index lists, in order.
    pub fn select(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let mut out = Self::zero(&self.f, row_idx.len(), col_idx.len());
        for (r, &ri) in row_idx.iter().enumerate() {
            for (c, &ci) in col_idx.iter().enumerate() {
                out.set(r, c, self.at(ri, ci).clone());
            }
        }
        out
    }

    pub fn col(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn from_cols(f: &F, rows: usize, cols: Vec<Vec<F::Elem>>) -> Self {
        let n = cols.len();
        let mut out = Self::zero(f, rows, n);
        for (c, v) in cols.into_iter().enumerate() {
            debug_assert_eq!(v.len(), rows);
            for (r, x) in v.into_iter().enumerate() {
                out.set(r, c, x);
            }
        }
        out
    }

    /// Reduced row echelon form with the fixed pivot rule.
    pub fn rref(&self) -> Echelon<F> {
        let f = self.f.clone();
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut next_row = 0;
        for c in 0..m.cols {
            if next_row == m.rows {
                break;
            }
            let Some(pr) = (next_row..m.rows).find(|&r| !f.is_zero(m.at(r, c))) else {
                continue;
            };
            if pr != next_row {
                for cc in 0..m.cols {
                    m.a.swap(pr * m.cols + cc, next_row * m.cols + cc);
                }
            }
            let inv = f.inv(m.at(next_row, c));
            for cc in c..m.cols {
                let v = f.mul(m.at(next_row, cc), &inv);
                m.set(next_row, cc, v);
            }
            for r in 0..m.rows {
                if r == next_row || f.is_zero(m.at(r, c)) {
                    continue;
                }
                let factor = m.at(r, c).clone();
                for cc in c..m.cols {
                    let v = f.sub(m.at(r, cc), &f.mul(&factor, m.at(next_row, cc)));
                    m.set(r, cc, v);
                }
            }
            pivot_cols.push(c);
            next_row += 1;
        }
        let rank = pivot_cols.len();
        Echelon { mat: m, pivot_cols, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel as matrix columns, one per free column of
    /// the echelon form, in ascending free-column order.
    pub fn kernel_basis(&self) -> Mat<F> {
        let f = &self.f;
        let ech = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &pc) in ech.pivot_cols.iter().enumerate() {
                v[pc] = Some(i);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| pivot_set[*c].is_none()).collect();
        let mut out = Mat::zero(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, f.one());
            for (i, &pc) in ech.pivot_cols.iter().enumerate() {
                out.set(pc, k, f.neg(ech.mat.at(i, fc)));
            }
        }
        out
    }

    /// Canonical echelon basis of the column space, as matrix columns:
    /// the nonzero rows of `rref(transpose)`, transposed back.
    pub fn image_basis(&self) -> Mat<F> {
        let ech = self.transpose().rref();
        let mut cols = Vec::with_capacity(ech.rank);
        for r in 0..ech.rank {
            cols.push((0..self.rows).map(|c| ech.mat.at(r, c).clone()).collect());
        }
        Mat::from_cols(&self.f, self.rows, cols)
    }

    /// Solve `self * X = rhs` exactly; free variables are set to zero.
    /// Returns `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &Mat<F>) -> Option<Mat<F>> {
        assert_eq!(self.rows, rhs.rows);
        let f = &self.f;
        let aug = self.hstack(rhs);
        let ech = aug.rref();
        // A pivot inside the right block means an inconsistent column.
        if ech.pivot_cols.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zero(f, self.cols, rhs.cols);
        for (i, &pc) in ech.pivot_cols.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, ech.mat.at(i, self.cols + c).clone());
            }
        }
        Some(x)
    }

    /// Apply the matrix to a vector.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.f;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for c in 0..self.cols {
                    if !f.is_zero(self.at(r, c)) && !f.is_zero(&v[c]) {
                        acc = f.add(&acc, &f.mul(self.at(r, c), &v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.f.elem_to_string(self.at(r, c))).collect())
            .collect()
    }

    pub fn from_string_rows(f: &F, rows: usize, cols: usize, data: &[Vec<String>]) -> Result<Self> {
        if data.len() != rows || data.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("matrix shape mismatch in serialized data".into()));
        }
        let mut m = Self::zero(f, rows, cols);
        for (r, row) in data.iter().enumerate() {
            for (c, s) in row.iter().enumerate() {
                m.set(r, c, f.elem_from_str(s)?);
            }
        }
        Ok(m)
    }
}

/// Incremental column-span tracker: feed candidate vectors, learn which ones
/// enlarge the span. Deterministic given the feeding order.
pub struct SpanTracker<F: Field> {
    f: F,
    dim: usize,
    // Rows already in reduced echelon form, with their pivot positions.
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> SpanTracker<F> {
    pub fn new(f: &F, dim: usize) -> Self {
        SpanTracker { f: f.clone(), dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current span; if a nonzero remainder is left,
    /// absorb it and return `true`.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let f = &self.f;
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&w[p]) {
                let factor = w[p].clone();
                for c in 0..self.dim {
                    w[c] = f.sub(&w[c], &f.mul(&factor, &row[c]));
                }
            }
        }
        match w.iter().position(|x| !f.is_zero(x)) {
            None => false,
            Some(p) => {
                let inv = f.inv(&w[p]);
                for c in 0..self.dim {
                    w[c] = f.mul(&w[c], &inv);
                }
                self.rows.push(w);
                self.pivots.push(p);
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn rank_and_kernel_identity_and_zero() {
        let f = Rationals;
        let id = Mat::identity(&f, 3);
        assert_eq!(id.rank(), 3);
        assert_eq!(id.kernel_basis().cols(), 0);

        let z = Mat::zero(&f, 2, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().cols(), 5);
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        // [[2,4],[1,2]]: rank 1, kernel spanned by (-2, 1).
        let f = Rationals;
        let m = Mat::from_i64_rows(&f, &[&[2, 4], &[1, 2]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.at(0, 0), &f.from_i64(-2));
        assert_eq!(k.at(1, 0), &f.from_i64(1));
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = Rationals;
        let a = Mat::from_i64_rows(&f, &[&[1, 2], &[3, 4]]);
        let b = Mat::from_i64_rows(&f, &[&[5], &[6]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);

        let sing = Mat::from_i64_rows(&f, &[&[1, 1], &[1, 1]]);
        let bad = Mat::from_i64_rows(&f, &[&[0], &[1]]);
        assert!(sing.solve(&bad).is_none());
        let ok = Mat::from_i64_rows(&f, &[&[3], &[3]]);
        let x2 = sing.solve(&ok).unwrap();
        assert_eq!(sing.mul(&x2), ok);
    }

    #[test]
    fn image_basis_spans_columns() {
        let f = PrimeField::new(5).unwrap();
        let m = Mat::from_i64_rows(&f, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let b = m.image_basis();
        assert_eq!(b.cols(), m.rank());
        // every original column solves against the basis
        for c in 0..m.cols() {
            let col = Mat::from_cols(&f, m.rows(), vec![m.col(c)]);
            assert!(b.solve(&col).is_some());
        }
    }

    #[test]
    fn span_tracker_matches_rank() {
        let f = Rationals;
        let m = Mat::from_i64_rows(&f, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let mut tr = SpanTracker::new(&f, 3);
        let mut fresh = 0;
        for c in 0..m.cols() {
            if tr.insert(&m.col(c)) {
                fresh += 1;
            }
        }
        assert_eq!(fresh, m.rank());
    }
}
