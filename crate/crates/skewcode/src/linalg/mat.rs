//! Dense matrices over GF(q).

use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{Felt, Field};

/// A dense `rows x cols` matrix over GF(q), row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Felt>,
}

/// Result of Gauss-Jordan elimination: the reduced row echelon form, its
/// rank, and the pivot columns in order.
#[derive(Clone, Debug)]
pub struct Rref {
    pub mat: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Felt>) -> Mat {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn zero(field: &Field, rows: usize, cols: usize) -> Mat {
        Self::new(field, rows, cols, vec![Felt(0); rows * cols])
    }

    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Felt(1));
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Felt>]) -> Mat {
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        let data: Vec<Felt> = rows.iter().flatten().copied().collect();
        Self::new(field, rows.len(), ncols, data)
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Felt) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::new(field, rows, cols, data)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Felt {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Felt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Felt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Felt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == Felt(0))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        debug_assert_eq!(self.field, other.field);
        let data: Vec<Felt> = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Mat::new(&self.field, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Mat {
        let data: Vec<Felt> = self.data.iter().map(|&a| self.field.neg(a)).collect();
        Mat::new(&self.field, self.rows, self.cols, data)
    }

    pub fn scalar_mul(&self, c: Felt) -> Mat {
        let data: Vec<Felt> = self.data.iter().map(|&a| self.field.mul(a, c)).collect();
        Mat::new(&self.field, self.rows, self.cols, data)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        debug_assert_eq!(self.field, other.field);
        let f = &self.field;
        Mat::from_fn(f, self.rows, other.cols, |i, j| {
            let mut acc = Felt(0);
            for k in 0..self.cols {
                acc = f.add(acc, f.mul(self.get(i, k), other.get(k, j)));
            }
            acc
        })
    }

    /// Row vector times matrix.
    pub fn row_mul(&self, v: &[Felt]) -> Vec<Felt> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        (0..self.cols)
            .map(|j| {
                let mut acc = Felt(0);
                for (i, &vi) in v.iter().enumerate() {
                    acc = f.add(acc, f.mul(vi, self.get(i, j)));
                }
                acc
            })
            .collect()
    }

    /// Entrywise map.
    pub fn map(&self, mut f: impl FnMut(Felt) -> Felt) -> Mat {
        let data: Vec<Felt> = self.data.iter().map(|&a| f(a)).collect();
        Mat::new(&self.field, self.rows, self.cols, data)
    }

    /// Kronecker product: block `(i, j)` of the result is
    /// `self[i][j] * other`.
    pub fn kron(&self, other: &Mat) -> Mat {
        debug_assert_eq!(self.field, other.field);
        let f = &self.field;
        Mat::from_fn(
            f,
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                let (ia, ib) = (i / other.rows, i % other.rows);
                let (ja, jb) = (j / other.cols, j % other.cols);
                f.mul(self.get(ia, ja), other.get(ib, jb))
            },
        )
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize; // next pivot row
        for col in 0..m.cols {
            let Some(pivot) = (pr..m.rows).find(|&r| m.get(r, col) != Felt(0)) else {
                continue;
            };
            m.swap_rows(pr, pivot);
            let inv = f.inv(m.get(pr, col)).expect("pivot is nonzero");
            m.scale_row(pr, inv);
            for r in 0..m.rows {
                if r != pr && m.get(r, col) != Felt(0) {
                    let factor = f.neg(m.get(r, col));
                    m.add_scaled_row(r, pr, factor);
                }
            }
            pivots.push(col);
            pr += 1;
            if pr == m.rows {
                break;
            }
        }
        Rref {
            mat: m,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis of the row space: RREF with zero rows dropped.
    pub fn row_canonical(&self) -> Mat {
        let r = self.rref();
        let data: Vec<Felt> = (0..r.rank).flat_map(|i| r.mat.row(i).to_vec()).collect();
        Mat::new(&self.field, r.rank, self.cols, data)
    }

    /// Do two matrices span the same row space?
    pub fn row_space_eq(&self, other: &Mat) -> bool {
        self.cols == other.cols && self.row_canonical() == other.row_canonical()
    }

    /// Is `v` in the row space?
    pub fn row_space_contains(&self, v: &[Felt]) -> bool {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        let r = self.rref();
        let mut rem: Vec<Felt> = v.to_vec();
        for (i, &p) in r.pivots.iter().enumerate() {
            if rem[p] != Felt(0) {
                let c = rem[p];
                for (j, rj) in rem.iter_mut().enumerate() {
                    *rj = f.sub(*rj, f.mul(c, r.mat.get(i, j)));
                }
            }
        }
        rem.iter().all(|&x| x == Felt(0))
    }

    /// Basis (as rows) of the right kernel `{ w : self w^T = 0 }`. The
    /// result has `cols - rank` rows.
    pub fn nullspace(&self) -> Mat {
        let f = &self.field;
        let r = self.rref();
        let mut rows: Vec<Vec<Felt>> = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (i, &p) in r.pivots.iter().enumerate() {
            pivot_of_col[p] = Some(i);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut w = vec![Felt(0); self.cols];
            w[free] = Felt(1);
            for (i, &p) in r.pivots.iter().enumerate() {
                w[p] = f.neg(r.mat.get(i, free));
            }
            rows.push(w);
        }
        if rows.is_empty() {
            Mat::zero(f, 0, self.cols)
        } else {
            Mat::from_rows(f, &rows)
        }
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let f = &self.field;
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(f, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col) != Felt(0))?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let pinv = f.inv(a.get(col, col)).expect("pivot is nonzero");
            a.scale_row(col, pinv);
            inv.scale_row(col, pinv);
            for r in 0..n {
                if r != col && a.get(r, col) != Felt(0) {
                    let factor = f.neg(a.get(r, col));
                    for j in 0..n {
                        let t = f.mul(factor, a.get(col, j));
                        a.set(r, j, f.add(a.get(r, j), t));
                        let t = f.mul(factor, inv.get(col, j));
                        inv.set(r, j, f.add(inv.get(r, j), t));
                    }
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let (x, y) = (self.get(a, j), self.get(b, j));
            self.set(a, j, y);
            self.set(b, j, x);
        }
    }

    fn scale_row(&mut self, r: usize, c: Felt) {
        for j in 0..self.cols {
            let v = self.field.mul(self.get(r, j), c);
            self.set(r, j, v);
        }
    }

    /// `row[a] += c * row[b]`
    fn add_scaled_row(&mut self, a: usize, b: usize, c: Felt) {
        for j in 0..self.cols {
            let v = self.field.add(self.get(a, j), self.field.mul(c, self.get(b, j)));
            self.set(a, j, v);
        }
    }

    /// Stack two matrices vertically.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        debug_assert_eq!(self.field, other.field);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat::new(&self.field, self.rows + other.rows, self.cols, data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(f: &Field, rows: usize, cols: usize, vals: &[u32]) -> Mat {
        Mat::new(f, rows, cols, vals.iter().map(|&v| Felt(v)).collect())
    }

    #[test]
    fn rref_and_rank() {
        let f = Field::new(2, 1).unwrap();
        let m = mat(&f, 2, 2, &[1, 1, 1, 1]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, &[0]);
        assert_eq!(r.mat, mat(&f, 2, 2, &[1, 1, 0, 0]));
        // Idempotence.
        assert_eq!(r.mat.rref().mat, r.mat);
        // Row space is preserved.
        assert!(m.row_space_eq(&r.mat));
    }

    #[test]
    fn nullspace_is_the_kernel() {
        let f = Field::new(3, 1).unwrap();
        let m = mat(&f, 2, 3, &[1, 2, 0, 0, 1, 1]);
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 1); // rank 2, nullity 1
        for i in 0..ns.rows() {
            let prod = m.mul(&ns.transpose());
            assert!(prod.is_zero(), "kernel row {} fails", i);
        }
        // rank + nullity = cols on a batch of small matrices.
        for vals in [[0u32, 1, 2, 2, 0, 1], [1, 1, 1, 2, 2, 2], [0, 0, 0, 0, 0, 0]] {
            let m = mat(&f, 2, 3, &vals);
            assert_eq!(m.rank() + m.nullspace().rows(), 3);
            assert!(m.mul(&m.nullspace().transpose()).is_zero());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::new(2, 2).unwrap();
        let m = mat(&f, 2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(&f, 2));
        assert_eq!(inv.mul(&m), Mat::identity(&f, 2));
        let singular = mat(&f, 2, 2, &[1, 2, 2, 3]); // row2 = y*row1
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn kronecker_mixed_product() {
        let f = Field::new(2, 2).unwrap();
        let a = mat(&f, 2, 2, &[1, 2, 0, 3]);
        let b = mat(&f, 2, 2, &[2, 0, 1, 1]);
        let c = mat(&f, 2, 2, &[3, 1, 2, 2]);
        let d = mat(&f, 2, 2, &[1, 0, 2, 1]);
        // (A (x) B)(C (x) D) = AC (x) BD
        assert_eq!(
            a.kron(&b).mul(&c.kron(&d)),
            a.mul(&c).kron(&b.mul(&d))
        );
        assert_eq!(a.kron(&b).transpose(), a.transpose().kron(&b.transpose()));
    }

    #[test]
    fn row_space_membership() {
        let f = Field::new(2, 1).unwrap();
        let m = mat(&f, 2, 3, &[1, 0, 1, 0, 1, 1]);
        assert!(m.row_space_contains(&[Felt(1), Felt(1), Felt(0)]));
        assert!(!m.row_space_contains(&[Felt(1), Felt(0), Felt(0)]));
    }
}
