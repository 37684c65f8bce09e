//! Dense matrices over GF(q)[z]: Hermite and Smith normal forms, left
//! kernels.

use alloc::vec;
use alloc::vec::Vec;

use super::poly::Poly;
use crate::gf::{Felt, Field};

/// A dense `rows x cols` matrix over GF(q)[z], row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMat {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Poly>) -> PolyMat {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        PolyMat {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn zero(field: &Field, rows: usize, cols: usize) -> PolyMat {
        Self::new(field, rows, cols, vec![Poly::zero(field); rows * cols])
    }

    pub fn identity(field: &Field, n: usize) -> PolyMat {
        let mut m = Self::zero(field, n, n);
        m.set_diag_ones();
        m
    }

    fn set_diag_ones(&mut self) {
        for i in 0..self.rows.min(self.cols) {
            *self.get_mut(i, i) = Poly::one(&self.field);
        }
    }

    /// Lift a scalar matrix to constant polynomials.
    pub fn from_scalar(m: &super::Mat) -> PolyMat {
        let f = m.field();
        let mut data = Vec::with_capacity(m.rows() * m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                data.push(Poly::constant(f, m.get(i, j)));
            }
        }
        PolyMat::new(f, m.rows(), m.cols(), data)
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Poly>]) -> PolyMat {
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        let data: Vec<Poly> = rows.iter().flatten().cloned().collect();
        Self::new(field, rows.len(), ncols, data)
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

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut Poly {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Poly> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn transpose(&self) -> PolyMat {
        let data: Vec<Poly> = (0..self.cols)
            .flat_map(|i| (0..self.rows).map(move |j| self.get(j, i).clone()))
            .collect();
        PolyMat::new(&self.field, self.cols, self.rows, data)
    }

    pub fn add(&self, other: &PolyMat) -> PolyMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data: Vec<Poly> = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a.add(b))
            .collect();
        PolyMat::new(&self.field, self.rows, self.cols, data)
    }

    pub fn mul(&self, other: &PolyMat) -> PolyMat {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let f = &self.field;
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(f);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                data.push(acc);
            }
        }
        PolyMat::new(f, self.rows, other.cols, data)
    }

    pub fn scalar_mul(&self, p: &Poly) -> PolyMat {
        let data: Vec<Poly> = self.data.iter().map(|a| a.mul(p)).collect();
        PolyMat::new(&self.field, self.rows, self.cols, data)
    }

    /// Row vector times matrix.
    pub fn row_mul(&self, v: &[Poly]) -> Vec<Poly> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                let mut acc = Poly::zero(&self.field);
                for (i, vi) in v.iter().enumerate() {
                    acc = acc.add(&vi.mul(self.get(i, j)));
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let x = self.get(a, j).clone();
            let y = self.get(b, j).clone();
            self.set(a, j, y);
            self.set(b, j, x);
        }
    }

    fn scale_row(&mut self, r: usize, c: Felt) {
        for j in 0..self.cols {
            let v = self.get(r, j).mul_scalar(c);
            self.set(r, j, v);
        }
    }

    /// `row[a] -= q * row[b]`
    fn sub_scaled_row(&mut self, a: usize, b: usize, q: &Poly) {
        for j in 0..self.cols {
            let v = self.get(a, j).sub(&q.mul(self.get(b, j)));
            self.set(a, j, v);
        }
    }

    /// Row Hermite normal form: returns `(h, u)` with `u` unimodular,
    /// `u * self = h`, pivots monic with strictly increasing column
    /// indices, entries above each pivot of lower degree than the pivot,
    /// and zero rows at the bottom.
    pub fn hnf(&self) -> (PolyMat, PolyMat) {
        let (h, u, _) = self.hnf_with_det();
        (h, u)
    }

    /// HNF plus the determinant of the accumulated unimodular transform
    /// (a nonzero field constant).
    fn hnf_with_det(&self) -> (PolyMat, PolyMat, Felt) {
        let f = self.field.clone();
        let mut h = self.clone();
        let mut u = PolyMat::identity(&f, self.rows);
        let mut det_u = Felt(1);
        let mut pr = 0usize; // next pivot row
        for col in 0..self.cols {
            if pr == self.rows {
                break;
            }
            // Knock degrees down in this column until at most one nonzero
            // entry remains at or below the pivot row.
            loop {
                let nonzero: Vec<usize> = (pr..self.rows)
                    .filter(|&r| !h.get(r, col).is_zero())
                    .collect();
                let Some(&best) = nonzero.iter().min_by_key(|&&r| h.get(r, col).degree()) else {
                    break;
                };
                if best != pr {
                    h.swap_rows(pr, best);
                    u.swap_rows(pr, best);
                    det_u = f.neg(det_u);
                }
                if nonzero.len() == 1 {
                    break;
                }
                for r in pr + 1..self.rows {
                    if h.get(r, col).is_zero() {
                        continue;
                    }
                    let (q, _) = h
                        .get(r, col)
                        .divmod(h.get(pr, col))
                        .expect("pivot is nonzero");
                    h.sub_scaled_row(r, pr, &q);
                    u.sub_scaled_row(r, pr, &q);
                }
            }
            if h.get(pr, col).is_zero() {
                continue; // no pivot in this column
            }
            // Monic pivot.
            let lc = h.get(pr, col).leading();
            if lc != Felt(1) {
                let inv = f.inv(lc).expect("nonzero leading coefficient");
                h.scale_row(pr, inv);
                u.scale_row(pr, inv);
                det_u = f.mul(det_u, inv);
            }
            // Degree-reduce the entries above the pivot.
            for r in 0..pr {
                if h.get(r, col).is_zero() {
                    continue;
                }
                let (q, _) = h
                    .get(r, col)
                    .divmod(h.get(pr, col))
                    .expect("pivot is nonzero");
                if !q.is_zero() {
                    h.sub_scaled_row(r, pr, &q);
                    u.sub_scaled_row(r, pr, &q);
                }
            }
            pr += 1;
        }
        (h, u, det_u)
    }

    /// Canonical generator of the row module: HNF with zero rows dropped.
    pub fn row_canonical(&self) -> PolyMat {
        let (h, _) = self.hnf();
        let kept: Vec<Vec<Poly>> = (0..h.rows)
            .map(|i| h.row(i))
            .filter(|r| r.iter().any(|p| !p.is_zero()))
            .collect();
        if kept.is_empty() {
            PolyMat::zero(&self.field, 0, self.cols)
        } else {
            PolyMat::from_rows(&self.field, &kept)
        }
    }

    /// Number of nonzero rows of the HNF.
    pub fn rank(&self) -> usize {
        self.row_canonical().rows
    }

    /// Do two matrices generate the same row module of GF(q)[z]^cols?
    pub fn row_module_eq(&self, other: &PolyMat) -> bool {
        self.cols == other.cols && self.row_canonical() == other.row_canonical()
    }

    /// Is `v` in the row module? Reduces `v` by the HNF rows.
    pub fn row_module_contains(&self, v: &[Poly]) -> bool {
        assert_eq!(v.len(), self.cols);
        let h = self.row_canonical();
        let mut rem: Vec<Poly> = v.to_vec();
        for i in 0..h.rows {
            // Pivot column of row i.
            let Some(p) = (0..h.cols).find(|&j| !h.get(i, j).is_zero()) else {
                continue;
            };
            if rem[p].is_zero() {
                continue;
            }
            let (q, _) = rem[p].divmod(h.get(i, p)).expect("pivot is nonzero");
            if !q.is_zero() {
                for (j, rj) in rem.iter_mut().enumerate() {
                    *rj = rj.sub(&q.mul(h.get(i, j)));
                }
            }
        }
        rem.iter().all(|p| p.is_zero())
    }

    /// Generators (as rows, in HNF) of the left kernel
    /// `{ w : w * self = 0 }`. The rows of the unimodular transform
    /// opposite the zero rows of the HNF generate the full (saturated)
    /// kernel: any `w` with `w M = 0` reduces over the pivot rows of `U` to
    /// a combination of these.
    pub fn left_kernel(&self) -> PolyMat {
        let (h, u) = self.hnf();
        let kernel_rows: Vec<Vec<Poly>> = (0..self.rows)
            .filter(|&i| h.row(i).iter().all(|p| p.is_zero()))
            .map(|i| u.row(i))
            .collect();
        if kernel_rows.is_empty() {
            return PolyMat::zero(&self.field, 0, self.rows);
        }
        PolyMat::from_rows(&self.field, &kernel_rows).row_canonical()
    }

    /// Determinant of a square matrix, computed from the HNF (the HNF of a
    /// square matrix is upper triangular).
    pub fn det(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let (h, _, det_u) = self.hnf_with_det();
        let mut d = Poly::one(&self.field);
        for i in 0..self.rows {
            d = d.mul(h.get(i, i));
        }
        // det(U M) = det(U) det(M) and det(U) is a nonzero constant.
        let inv = self.field.inv(det_u).expect("det of a unimodular transform is a unit");
        d.mul_scalar(inv)
    }

    /// Smith normal form: the nonzero invariant factors, monic, each
    /// dividing the next.
    pub fn snf(&self) -> Vec<Poly> {
        let f = self.field.clone();
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut t = 0usize;
        let mut out: Vec<Poly> = Vec::new();
        'outer: while t < rows.min(cols) {
            // Find a minimal-degree nonzero entry in the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a.get(i, j).is_zero()
                        && best
                            .map(|(bi, bj)| a.get(i, j).degree() < a.get(bi, bj).degree())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break; // trailing block is zero
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            // Clear the pivot's column and row; remainders may survive with
            // smaller degree, in which case re-select the pivot.
            let mut dirty = false;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = a.get(i, t).divmod(a.get(t, t)).expect("pivot is nonzero");
                a.sub_scaled_row(i, t, &q);
                if !r.is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = a.get(t, j).divmod(a.get(t, t)).expect("pivot is nonzero");
                a.sub_scaled_col(j, t, &q);
                if !r.is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'outer;
            }
            // Divisibility fix-up: fold a non-multiple into row t.
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !a.get(t, t).divides(a.get(i, j)) {
                        let one = Poly::one(&f);
                        // row t += row i, reintroducing column work.
                        for c in 0..cols {
                            let v = a.get(t, c).add(&one.mul(a.get(i, c)));
                            a.set(t, c, v);
                        }
                        continue 'outer;
                    }
                }
            }
            let lc = a.get(t, t).leading();
            if lc != Felt(1) {
                let inv = f.inv(lc).expect("nonzero leading coefficient");
                let v = a.get(t, t).mul_scalar(inv);
                a.set(t, t, v);
            }
            out.push(a.get(t, t).clone());
            t += 1;
        }
        out
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let x = self.get(i, a).clone();
            let y = self.get(i, b).clone();
            self.set(i, a, y);
            self.set(i, b, x);
        }
    }

    /// `col[a] -= q * col[b]`
    fn sub_scaled_col(&mut self, a: usize, b: usize, q: &Poly) {
        for i in 0..self.rows {
            let v = self.get(i, a).sub(&q.mul(self.get(i, b)));
            self.set(i, a, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(f: &Field, rows: usize, cols: usize, entries: &[&[u32]]) -> PolyMat {
        let data: Vec<Poly> = entries
            .iter()
            .map(|cs| {
                let v: Vec<Felt> = cs.iter().map(|&x| Felt(x)).collect();
                Poly::new(f, &v)
            })
            .collect();
        PolyMat::new(f, rows, cols, data)
    }

    #[test]
    fn hnf_of_column_with_a_unit() {
        let f = Field::new(2, 1).unwrap();
        // Rows (z) and (1): the row module is everything, H = [[1],[0]].
        let m = pm(&f, 2, 1, &[&[0, 1], &[1]]);
        let (h, u) = m.hnf();
        assert_eq!(h, pm(&f, 2, 1, &[&[1], &[]]));
        assert_eq!(u.mul(&m), h);
        assert!(u.det().is_unit());
    }

    #[test]
    fn hnf_is_canonical_under_unimodular_row_mixing() {
        let f = Field::new(2, 1).unwrap();
        let m = pm(&f, 2, 2, &[&[0, 1], &[1], &[0, 0, 1], &[1, 1]]);
        // A concrete unimodular matrix: product of a transvection and a swap.
        let l = pm(&f, 2, 2, &[&[0, 1], &[1], &[1], &[]]);
        assert!(l.det().is_unit());
        assert!(m.row_module_eq(&l.mul(&m)));
        let (h, u) = l.mul(&m).hnf();
        assert_eq!(u.mul(&l.mul(&m)), h);
        assert_eq!(h, m.hnf().0);
    }

    #[test]
    fn hnf_pivots_are_reduced() {
        let f = Field::new(3, 1).unwrap();
        // Row-mix a diagonal so the HNF has work to do.
        let m = pm(
            &f,
            2,
            2,
            &[&[0, 0, 1], &[1, 1], &[0, 1], &[2, 1]],
        );
        let (h, u) = m.hnf();
        assert_eq!(u.mul(&m), h);
        assert!(u.det().is_unit());
        // Pivots monic, above-pivot entries of smaller degree.
        let mut last_col = None;
        for i in 0..h.rows() {
            if let Some(p) = (0..h.cols()).find(|&j| !h.get(i, j).is_zero()) {
                assert!(h.get(i, p).is_monic());
                assert!(last_col.is_none_or(|lc| p > lc));
                last_col = Some(p);
                for r in 0..i {
                    assert!(h.get(r, p).degree() < h.get(i, p).degree());
                }
            }
        }
    }

    #[test]
    fn snf_of_mixed_diagonal() {
        let f = Field::new(2, 1).unwrap();
        // diag(z, 1) has invariant factors (1, z).
        let m = pm(&f, 2, 2, &[&[0, 1], &[], &[], &[1]]);
        let factors = m.snf();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0], Poly::one(&f));
        assert_eq!(factors[1], Poly::new(&f, &[Felt(0), Felt(1)]));
    }

    #[test]
    fn snf_divisibility_and_determinant() {
        let f = Field::new(3, 1).unwrap();
        let m = pm(
            &f,
            2,
            2,
            &[&[1, 1], &[2, 0, 1], &[0, 2], &[1, 1, 1]],
        );
        let factors = m.snf();
        for w in factors.windows(2) {
            assert!(w[0].divides(&w[1]));
            assert!(w[0].is_monic());
        }
        // Product of invariant factors = monic determinant (full rank here).
        let prod = factors.iter().fold(Poly::one(&f), |acc, p| acc.mul(p));
        assert_eq!(prod, m.det().monic());
    }

    #[test]
    fn left_kernel_annihilates_and_is_saturated() {
        let f = Field::new(2, 1).unwrap();
        // M = [[1],[z]]: kernel generated by (z, 1).
        let m = pm(&f, 2, 1, &[&[1], &[0, 1]]);
        let k = m.left_kernel();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), alloc::vec![Poly::new(&f, &[Felt(0), Felt(1)]), Poly::one(&f)]);
        assert!(k.mul(&m).is_zero());

        // Saturation, exhaustively: every w of entry-degree <= 3 with
        // w M = 0 lies in the row module of the kernel.
        let polys: Vec<Poly> = (0..16u32)
            .map(|bits| {
                let cs: Vec<Felt> = (0..4).map(|i| Felt((bits >> i) & 1)).collect();
                Poly::new(&f, &cs)
            })
            .collect();
        for a in &polys {
            for b in &polys {
                let w = alloc::vec![a.clone(), b.clone()];
                let prod = &a.mul(m.get(0, 0)).add(&b.mul(m.get(1, 0)));
                if prod.is_zero() {
                    assert!(k.row_module_contains(&w));
                }
            }
        }
    }

    #[test]
    fn row_module_membership() {
        let f = Field::new(2, 1).unwrap();
        let m = pm(&f, 1, 2, &[&[0, 1], &[1]]); // single row (z, 1)
        // z * (z, 1) = (z^2, z) is a member; (1, 0) is not.
        let z2 = Poly::new(&f, &[Felt(0), Felt(0), Felt(1)]);
        let z = Poly::new(&f, &[Felt(0), Felt(1)]);
        assert!(m.row_module_contains(&[z2, z]));
        assert!(!m.row_module_contains(&[Poly::one(&f), Poly::zero(&f)]));
    }
}
