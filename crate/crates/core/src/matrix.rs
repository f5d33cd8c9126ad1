//! Dense matrices over a [`Field`], with the echelon, Gram and congruence
//! machinery the code constructions need.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Which sesquilinear/bilinear form a code is measured against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerProduct {
    /// `<x, y> = Σ x_i y_i^q` on GF(q²)^n.
    Hermitian,
    /// `<x, y> = x Ω yᵀ` on GF(q)^{2n}.
    Symplectic,
}

impl fmt::Display for InnerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InnerProduct::Hermitian => "hermitian",
            InnerProduct::Symplectic => "symplectic",
        })
    }
}

#[derive(Clone)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && *self.field == *other.field
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matrix<GF({})>{}x{}",
            self.field.order(),
            self.rows,
            self.cols
        )?;
        for i in 0..self.rows {
            write!(f, "\n  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Result of Gauss–Jordan elimination: `reduced = transform · input`.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub transform: Matrix,
}

impl Matrix {
    pub fn zeros(field: &Arc<Field>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Arc<Field>, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn new(field: &Arc<Field>, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&v| v as u32 >= field.order()) {
            return Err(Error::ElementOutOfRange {
                value: bad as u64,
                order: field.order(),
            });
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds from row slices; every row must have `cols` entries.
    pub fn from_rows<R: AsRef<[Elem]>>(
        field: &Arc<Field>,
        cols: usize,
        rows: &[R],
    ) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row of length {} where {cols} expected",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    /// The standard alternating form `Ω_n = [[0, I], [-I, 0]]`.
    pub fn omega(field: &Arc<Field>, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, 2 * n, 2 * n);
        let minus_one = field.neg(1);
        for i in 0..n {
            m.set(i, n + i, 1);
            m.set(n + i, i, minus_one);
        }
        m
    }

    /// `diag(J₂, …, J₂, 0, …, 0)` with `pairs` copies of `J₂ = [[0,1],[-1,0]]`.
    pub fn j2_blocks(field: &Arc<Field>, pairs: usize, size: usize) -> Matrix {
        assert!(2 * pairs <= size);
        let mut m = Matrix::zeros(field, size, size);
        let minus_one = field.neg(1);
        for b in 0..pairs {
            m.set(2 * b, 2 * b + 1, 1);
            m.set(2 * b + 1, 2 * b, minus_one);
        }
        m
    }

    /// `diag(1, …, 1, 0, …, 0)` with `ones` leading ones.
    pub fn partial_identity(field: &Arc<Field>, ones: usize, size: usize) -> Matrix {
        let mut m = Matrix::zeros(field, size, size);
        for i in 0..ones {
            m.set(i, i, 1);
        }
        m
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
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

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Entrywise `x ↦ x^{√q}`.
    pub fn conj(&self) -> Result<Matrix> {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = self.field.conj(*v)?;
        }
        Ok(out)
    }

    /// `Āᵀ`, checking that the entries live in the quadratic extension of `base`.
    pub fn conj_transpose(&self, base: &Field) -> Result<Matrix> {
        self.field.check_quadratic_over(base)?;
        self.transpose().conj()
    }

    /// `Āᵀ` relative to the field's own quadratic subfield.
    pub fn adjoint(&self) -> Result<Matrix> {
        self.transpose().conj()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        assert!(
            *self.field == *other.field,
            "matrices over different fields"
        );
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, other.get(l, j))));
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (l, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(l, j)));
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let rows: Vec<&[Elem]> = idx.iter().map(|&i| self.row(i)).collect();
        Matrix::from_rows(&self.field, self.cols, &rows).expect("rows come from a valid matrix")
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (c, &j) in idx.iter().enumerate() {
                out.set(i, c, self.get(i, j));
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: Elem) {
        for j in 0..self.cols {
            let v = self.get(r, j);
            self.set(r, j, self.field.mul(v, s));
        }
    }

    /// `row[dst] -= s · row[src]`
    fn sub_row(&mut self, dst: usize, src: usize, s: Elem) {
        let f = self.field.clone();
        for j in 0..self.cols {
            let v = f.sub(self.get(dst, j), f.mul(s, self.get(src, j)));
            self.set(dst, j, v);
        }
    }

    /// Gauss–Jordan elimination with leftmost/topmost pivots.
    pub fn rref(&self) -> Rref {
        let mut r = self.clone();
        let mut t = Matrix::identity(&self.field, self.rows);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| r.get(i, col) != 0) else {
                continue;
            };
            r.swap_rows(row, p);
            t.swap_rows(row, p);
            let s = self.field.inv(r.get(row, col)).expect("pivot is nonzero");
            r.scale_row(row, s);
            t.scale_row(row, s);
            for i in 0..self.rows {
                let v = r.get(i, col);
                if i != row && v != 0 {
                    r.sub_row(i, row, v);
                    t.sub_row(i, row, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            reduced: r,
            rank: row,
            pivots,
            transform: t,
        }
    }

    /// Rank only; skips the transform bookkeeping of [`Matrix::rref`].
    pub fn rank(&self) -> usize {
        let mut r = self.clone();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| r.get(i, col) != 0) else {
                continue;
            };
            r.swap_rows(row, p);
            let s = self.field.inv(r.get(row, col)).expect("pivot is nonzero");
            r.scale_row(row, s);
            for i in row + 1..self.rows {
                let v = r.get(i, col);
                if v != 0 {
                    r.sub_row(i, row, v);
                }
            }
            row += 1;
        }
        row
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "{}x{} is not square",
                self.rows, self.cols
            )));
        }
        let e = self.rref();
        if e.rank < self.rows {
            return Err(Error::Singular);
        }
        Ok(e.transform)
    }

    /// Basis (as rows) of `{z : M zᵀ = 0}`.
    pub fn null_space(&self) -> Matrix {
        let e = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        let f = &self.field;
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            out.set(b, fc, 1);
            for (i, &pc) in e.pivots.iter().enumerate() {
                out.set(b, pc, f.neg(e.reduced.get(i, fc)));
            }
        }
        out
    }

    /// Basis of `{x : x M = 0}`.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().null_space()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.get(i, i) == 0
                    && (0..i).all(|j| self.get(i, j) == self.field.neg(self.get(j, i)))
            })
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square()
            && self.field.base_order().is_some()
            && (0..self.rows).all(|i| {
                (0..=i).all(|j| self.get(i, j) == self.field.conj(self.get(j, i)).unwrap())
            })
    }
}

/// `G Ḡᵀ` (Hermitian) or `G Ω Gᵀ` (symplectic).
pub fn gram(g: &Matrix, inner: InnerProduct) -> Result<Matrix> {
    match inner {
        InnerProduct::Hermitian => Ok(g.mul(&g.adjoint()?)),
        InnerProduct::Symplectic => {
            if !g.cols().is_multiple_of(2) {
                return Err(Error::OddLength(g.cols()));
            }
            let omega = Matrix::omega(g.field(), g.cols() / 2);
            Ok(g.mul(&omega).mul(&g.transpose()))
        }
    }
}

/// Congruence-reduces a skew-symmetric matrix: returns invertible `Q` and
/// the rank `t` with `Q M Qᵀ = diag(J₂ × t/2, 0, …)`.
///
/// Symplectic Gram–Schmidt on the rows of the identity: take the first
/// pair `(u, v)` (lexicographic) with `<u, v> ≠ 0`, scale `v` so the pairing
/// is 1, and project both out of every remaining vector.
pub fn skew_reduce(m: &Matrix) -> Result<(Matrix, usize)> {
    if !m.is_skew_symmetric() {
        return Err(Error::NotSkewSymmetric);
    }
    let f = m.field().clone();
    let n = m.rows();
    let pair = |a: &[Elem], b: &[Elem]| -> Elem {
        let ma = m.apply(a);
        ma.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
    };
    let mut pending: Vec<Vec<Elem>> = Matrix::identity(&f, n).row_vecs();
    let mut out: Vec<Vec<Elem>> = Vec::with_capacity(n);
    loop {
        let mut found = None;
        'scan: for i in 0..pending.len() {
            for j in i + 1..pending.len() {
                let s = pair(&pending[i], &pending[j]);
                if s != 0 {
                    found = Some((i, j, s));
                    break 'scan;
                }
            }
        }
        let Some((i, j, s)) = found else { break };
        let v_raw = pending.remove(j);
        let u = pending.remove(i);
        let s_inv = f.inv(s)?;
        let v: Vec<Elem> = v_raw.iter().map(|&x| f.mul(x, s_inv)).collect();
        for w in pending.iter_mut() {
            // w ← w − <w,v> u + <w,u> v
            let wv = pair(w, &v);
            let wu = pair(w, &u);
            for ((x, &ux), &vx) in w.iter_mut().zip(&u).zip(&v) {
                *x = f.add(f.sub(*x, f.mul(wv, ux)), f.mul(wu, vx));
            }
        }
        out.push(u);
        out.push(v);
    }
    let t = out.len();
    out.extend(pending);
    Ok((Matrix::from_rows(&f, n, &out)?, t))
}

/// For a nonsingular Hermitian `M`, returns invertible `Q` with
/// `Q M Q̄ᵀ = I`.
pub fn hermitian_unitarize(m: &Matrix) -> Result<Matrix> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let f = m.field().clone();
    let n = m.rows();
    if m.rank() < n {
        return Err(Error::Singular);
    }
    // <a, b> = a M b̄ᵀ
    let pair = |a: &[Elem], b: &[Elem]| -> Elem {
        let ma = m.apply(a);
        ma.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, f.conj(y).unwrap())))
    };
    let mut pending: Vec<Vec<Elem>> = Matrix::identity(&f, n).row_vecs();
    let mut out: Vec<Vec<Elem>> = Vec::with_capacity(n);
    while !pending.is_empty() {
        let idx = match (0..pending.len()).find(|&i| pair(&pending[i], &pending[i]) != 0) {
            Some(i) => i,
            None => {
                // all remaining vectors isotropic: combine the first pair that pairs
                // nontrivially, u + c·w with the smallest c giving a nonzero trace
                let (i, j) = (0..pending.len())
                    .flat_map(|i| (i + 1..pending.len()).map(move |j| (i, j)))
                    .find(|&(i, j)| pair(&pending[i], &pending[j]) != 0)
                    .ok_or(Error::Singular)?;
                let w = pending[j].clone();
                let u = pending[i].clone();
                let combined = f
                    .elements()
                    .map(|c| {
                        u.iter()
                            .zip(&w)
                            .map(|(&a, &b)| f.add(a, f.mul(c, b)))
                            .collect::<Vec<_>>()
                    })
                    .find(|cand| pair(cand, cand) != 0)
                    .expect("the trace form is nonzero");
                pending[i] = combined;
                i
            }
        };
        let v = pending.remove(idx);
        let x = f.solve_norm(pair(&v, &v))?;
        let x_inv = f.inv(x)?;
        let v: Vec<Elem> = v.iter().map(|&a| f.mul(a, x_inv)).collect();
        for w in pending.iter_mut() {
            let wv = pair(w, &v);
            for (a, &b) in w.iter_mut().zip(&v) {
                *a = f.sub(*a, f.mul(wv, b));
            }
        }
        out.push(v);
    }
    Matrix::from_rows(&f, n, &out)
}
