//! Dense matrices over a finite field.
//!
//! Entries are stored row-major. Elimination is deterministic: the leftmost
//! available column is pivoted first, using the topmost row with a nonzero
//! entry, so echelon forms are reproducible bit for bit.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::gf::{prime_divisors, Elem, Field};
use crate::poly::Poly;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over F_{}:", self.rows, self.cols, self.field.order())?;
        for i in 0..self.rows {
            let row: Vec<u32> = self.row(i).iter().map(|e| e.code()).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Elem::ONE;
        }
        m
    }

    pub fn scalar(field: &Field, n: usize, c: Elem) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn diag(field: &Field, entries: &[Elem]) -> Mat {
        let n = entries.len();
        let mut m = Mat::zeros(field, n, n);
        for (i, &c) in entries.iter().enumerate() {
            m.data[i * n + i] = c;
        }
        m
    }

    /// Row-major data; entries are checked against the field.
    pub fn from_flat(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::DimMismatch(alloc::format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|&e| !field.contains(e)) {
            return Err(Error::FieldMismatch);
        }
        Ok(Mat { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<Mat> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimMismatch("ragged rows".into()));
        }
        Mat::from_flat(field, rows.len(), cols, rows.concat())
    }

    /// Integer entries reduced into the prime subfield.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flat_map(|r| r.iter().map(|&v| field.from_int(v))).collect();
        Mat { field: field.clone(), rows: rows.len(), cols, data }
    }

    /// Column vectors as the columns of a matrix.
    pub fn from_cols(field: &Field, n: usize, cols: &[Vec<Elem>]) -> Mat {
        let mut m = Mat::zeros(field, n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n {
                m.data[i * cols.len() + j] = c[i];
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Elem> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .all(|(j, &e)| e == if i == j { Elem::ONE } else { Elem::ZERO })
            })
    }

    /// Matrix product; panics on a shape or field mismatch.
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        assert!(self.field == other.field, "field mismatch in product");
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        let n = other.cols;
        for i in 0..self.rows {
            let dst = &mut out.data[i * n..(i + 1) * n];
            for (k, &a) in self.row(i).iter().enumerate() {
                if !a.is_zero() {
                    f.axpy(dst, a, other.row(k));
                }
            }
        }
        out
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| self.field.dot(self.row(i), v)).collect()
    }

    /// `v * self` for a row vector `v`.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.rows, v.len());
        let mut out = vec![Elem::ZERO; self.cols];
        for (i, &c) in v.iter().enumerate() {
            self.field.axpy(&mut out, c, self.row(i));
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: Elem) -> Mat {
        let mut m = self.clone();
        self.field.scale(&mut m.data, c);
        m
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: Elem, other: &Mat) -> Mat {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let mut m = self.clone();
        self.field.axpy(&mut m.data, c, &other.data);
        m
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        m
    }

    /// Apply a map to every entry, keeping the field.
    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> Mat {
        Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&e| f(e)).collect(),
        }
    }

    /// Reinterpret the entries in another field with the same element codes
    /// (an embedding of a subfield given by shared codes, e.g. `F_p`).
    pub fn with_field(&self, field: &Field) -> Result<Mat> {
        Mat::from_flat(field, self.rows, self.cols, self.data.clone())
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert!(self.is_square());
        let mut acc = Mat::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Kronecker product; row index `i_a * rows_b + i_b`.
    pub fn kron(&self, other: &Mat) -> Result<Mat> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let (rb, cb) = (other.rows, other.cols);
        let mut m = Mat::zeros(f, self.rows * rb, self.cols * cb);
        let width = self.cols * cb;
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let a = self.get(ia, ja);
                if a.is_zero() {
                    continue;
                }
                for ib in 0..rb {
                    let start = (ia * rb + ib) * width + ja * cb;
                    f.axpy(&mut m.data[start..start + cb], a, other.row(ib));
                }
            }
        }
        Ok(m)
    }

    pub fn block_diag(field: &Field, blocks: &[&Mat]) -> Mat {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Mat::zeros(field, r, c);
        let (mut i0, mut j0) = (0, 0);
        for b in blocks {
            m.set_block(i0, j0, b);
            i0 += b.rows;
            j0 += b.cols;
        }
        m
    }

    /// Copy `b` into `self` with its top-left corner at `(i0, j0)`.
    pub fn set_block(&mut self, i0: usize, j0: usize, b: &Mat) {
        for i in 0..b.rows {
            let start = (i0 + i) * self.cols + j0;
            self.data[start..start + b.cols].copy_from_slice(b.row(i));
        }
    }

    pub fn block(&self, i0: usize, j0: usize, rows: usize, cols: usize) -> Mat {
        let mut m = Mat::zeros(&self.field, rows, cols);
        for i in 0..rows {
            let start = (i0 + i) * self.cols + j0;
            m.row_mut(i).copy_from_slice(&self.data[start..start + cols]);
        }
        m
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref_rank(&self) -> (Mat, usize, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let r = pivots.len();
        (m, r, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv_nonzero(self.data[r * cols + c]);
            f.scale(&mut self.data[r * cols..(r + 1) * cols], inv);
            let pivot_row: Vec<Elem> = self.row(r).to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let e = self.data[i * cols + c];
                if !e.is_zero() {
                    f.axpy(&mut self.data[i * cols..(i + 1) * cols], f.neg(e), &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(&self.field, self.cols);
        for i in 0..self.rows {
            basis.insert(self.row(i).to_vec());
            if basis.rank() == self.cols {
                break;
            }
        }
        basis.rank()
    }

    /// Basis of the right null space: one vector per free column in
    /// increasing order, with that coordinate 1 and the other free
    /// coordinates 0.
    pub fn kernel_basis(&self) -> Vec<Vec<Elem>> {
        let (r, rank, pivots) = self.rref_rank();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Elem::ZERO; self.cols];
            v[free] = Elem::ONE;
            for (i, &c) in pivots.iter().enumerate().take(rank) {
                v[c] = f.neg(r.get(i, free));
            }
            out.push(v);
        }
        out
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::NotInvertible);
        }
        let n = self.rows;
        let mut aug = Mat::zeros(&self.field, n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Mat::identity(&self.field, n));
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::NotInvertible);
        }
        Ok(aug.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Least `n >= 1` with `self^n = 1`, by repeated multiplication.
    pub fn matrix_order(&self, cap: u64) -> Result<u64> {
        if !self.is_invertible() {
            return Err(Error::NotInvertible);
        }
        let mut acc = self.clone();
        let mut n = 1u64;
        while !acc.is_identity() {
            if n >= cap {
                return Err(Error::OrderExceedsCap(cap));
            }
            acc = acc.mul(self);
            n += 1;
        }
        Ok(n)
    }

    /// Order of a matrix known to satisfy `self^multiple = 1`, found by
    /// stripping prime factors from `multiple`.
    pub fn order_dividing(&self, multiple: u64) -> u64 {
        let mut n = multiple;
        for r in prime_divisors(multiple) {
            while n.is_multiple_of(r) && self.pow(n / r).is_identity() {
                n /= r;
            }
        }
        n
    }

    /// Characteristic polynomial `det(x I - self)` via reduction to upper
    /// Hessenberg form.
    pub fn charpoly(&self) -> Poly {
        assert!(self.is_square());
        let f = self.field.clone();
        let n = self.rows;
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(piv) = (j + 1..n).find(|&i| !h.get(i, j).is_zero()) else {
                continue;
            };
            if piv != j + 1 {
                for c in 0..n {
                    h.data.swap(piv * n + c, (j + 1) * n + c);
                }
                for r in 0..n {
                    h.data.swap(r * n + piv, r * n + j + 1);
                }
            }
            let inv = f.inv_nonzero(h.get(j + 1, j));
            for i in j + 2..n {
                let u = f.mul(h.get(i, j), inv);
                if u.is_zero() {
                    continue;
                }
                let src: Vec<Elem> = h.row(j + 1).to_vec();
                f.axpy(h.row_mut(i), f.neg(u), &src);
                for r in 0..n {
                    let add = f.mul(u, h.get(r, i));
                    let v = f.add(h.get(r, j + 1), add);
                    h.set(r, j + 1, v);
                }
            }
        }
        let mut ps: Vec<Poly> = Vec::with_capacity(n + 1);
        ps.push(Poly::one());
        for m in 1..=n {
            let lin = Poly::linear(&f, h.get(m - 1, m - 1));
            let mut pm = lin.mul(&f, &ps[m - 1]);
            let mut t = Elem::ONE;
            for i in 1..m {
                t = f.mul(t, h.get(m - i, m - i - 1));
                if t.is_zero() {
                    break;
                }
                let c = f.mul(t, h.get(m - i - 1, m - 1));
                pm = pm.sub(&f, &ps[m - i - 1].scale(&f, c));
            }
            ps.push(pm);
        }
        ps.pop().unwrap()
    }

    /// `poly(self)` by Horner's rule.
    pub fn eval_poly(&self, poly: &Poly) -> Mat {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Mat::zeros(&self.field, n, n);
        for &c in poly.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = self.field.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }

    pub fn trace(&self) -> Elem {
        (0..self.rows.min(self.cols)).fold(Elem::ZERO, |a, i| self.field.add(a, self.get(i, i)))
    }
}

/// An incrementally built basis of a subspace of `F^n`.
///
/// Rows are kept in semi-echelon form: each row is normalised to 1 at its
/// pivot and every later row vanishes at earlier pivots, which is all that
/// reduction in insertion order needs.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    dim: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: &Field, dim: usize) -> EchelonBasis {
        EchelonBasis { field: field.clone(), dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the basis in place and return the coefficients used.
    pub fn reduce(&self, v: &mut [Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut coeffs = Vec::with_capacity(self.rows.len());
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let e = v[c];
            coeffs.push(e);
            if !e.is_zero() {
                f.axpy(v, f.neg(e), row);
            }
        }
        coeffs
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|e| e.is_zero())
    }

    /// Coordinates of `v` relative to the stored rows, or `None` if `v` is
    /// outside the span.
    pub fn coords(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        let mut w = v.to_vec();
        let c = self.reduce(&mut w);
        w.iter().all(|e| e.is_zero()).then_some(c)
    }

    /// Add `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Elem>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = self.field.inv_nonzero(v[c]);
        self.field.scale(&mut v, inv);
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    /// The canonical reduced row echelon basis of the span.
    pub fn rref(&self) -> Mat {
        let mut m = Mat::zeros(&self.field, self.rows.len(), self.dim);
        for (i, r) in self.rows.iter().enumerate() {
            m.row_mut(i).copy_from_slice(r);
        }
        let (r, rank, _) = m.rref_rank();
        r.block(0, 0, rank, self.dim)
    }

    /// Rows of [`EchelonBasis::rref`].
    pub fn rref_rows(&self) -> Vec<Vec<Elem>> {
        let m = self.rref();
        (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
    }
}

#[cfg(test)]
impl Mat {
    fn rows_vec(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Field {
        Field::make(p, 1).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f5 = f(5);
        assert_eq!(Mat::identity(&f5, 4).rref_rank().1, 4);
        assert_eq!(Mat::zeros(&f5, 3, 3).rref_rank().1, 0);
        let (r, rank, piv) = Mat::from_ints(&f5, &[&[1, 2], &[2, 4]]).rref_rank();
        assert_eq!((rank, piv), (1, vec![0]));
        assert_eq!(r, Mat::from_ints(&f5, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kernel_examples() {
        let f5 = f(5);
        assert!(Mat::identity(&f5, 3).kernel_basis().is_empty());
        let k = Mat::zeros(&f5, 3, 3).kernel_basis();
        assert_eq!(k, Mat::identity(&f5, 3).rows_vec());
        let k = Mat::from_ints(&f5, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![Elem(4), Elem(1)]]);
    }

    #[test]
    fn kron_examples() {
        let f5 = f(5);
        let k = Mat::identity(&f5, 2).kron(&Mat::identity(&f5, 3)).unwrap();
        assert_eq!(k, Mat::identity(&f5, 6));
        let a = Mat::diag(&f5, &[Elem(2), Elem(3)]);
        let b = Mat::diag(&f5, &[Elem(4), Elem(1)]);
        let expect = Mat::diag(&f5, &[Elem(3), Elem(2), Elem(2), Elem(3)]);
        assert_eq!(a.kron(&b).unwrap(), expect);
        let f7 = f(7);
        assert_eq!(a.kron(&Mat::identity(&f7, 1)), Err(Error::FieldMismatch));
    }

    #[test]
    fn order_examples() {
        let f5 = f(5);
        assert_eq!(Mat::identity(&f5, 2).matrix_order(100), Ok(1));
        assert_eq!(Mat::from_ints(&f5, &[&[1, 1], &[0, 1]]).matrix_order(100), Ok(5));
        let w = Mat::from_ints(&f5, &[&[0, -1], &[1, 0]]);
        assert_eq!(w.matrix_order(100), Ok(4));
        assert_eq!(w.order_dividing(120), 4);
        assert_eq!(w.matrix_order(3), Err(Error::OrderExceedsCap(3)));
        let sing = Mat::from_ints(&f5, &[&[1, 2], &[2, 4]]);
        assert_eq!(sing.matrix_order(10), Err(Error::NotInvertible));
    }

    #[test]
    fn inverse_roundtrip() {
        let f7 = f(7);
        let a = Mat::from_ints(&f7, &[&[2, 1, 0], &[1, 3, 5], &[0, 4, 6]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(Mat::from_ints(&f7, &[&[1, 2], &[2, 4]]).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn charpoly_matches_cayley_hamilton() {
        let f7 = f(7);
        let a = Mat::from_ints(&f7, &[&[0, 0, 1, 2], &[1, 3, 0, 5], &[0, 4, 6, 1], &[2, 2, 0, 3]]);
        let cp = a.charpoly();
        assert_eq!(cp.degree(), Some(4));
        assert!(a.eval_poly(&cp).is_zero());
        // trace appears as minus the subleading coefficient
        assert_eq!(cp.coeff(3), f7.neg(a.trace()));
    }

    #[test]
    fn echelon_basis_coords() {
        let f5 = f(5);
        let mut b = EchelonBasis::new(&f5, 3);
        assert!(b.insert(vec![Elem(1), Elem(2), Elem(0)]));
        assert!(b.insert(vec![Elem(0), Elem(1), Elem(1)]));
        assert!(!b.insert(vec![Elem(1), Elem(3), Elem(1)]));
        let v = vec![Elem(0), Elem(0), Elem(1)];
        assert!(b.coords(&v).is_none());
        assert_eq!(b.rref().rows(), 2);
    }
}
