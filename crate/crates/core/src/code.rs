//! Linear codes held in canonical form, and the constructions around their
//! Hermitian and symplectic hulls.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::{gram, hermitian_unitarize, skew_reduce, InnerProduct, Matrix};

/// Default cap on the number of vectors a codeword scan may visit.
pub const DEFAULT_CODEWORD_BUDGET: u64 = 1 << 20;

/// An `[n, k]` code over `field`, stored as the unique RREF basis of its
/// row space, so that equality of codes is equality of generators.
#[derive(Clone)]
pub struct LinearCode {
    generator: Matrix,
    pivots: Vec<usize>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.generator == other.generator
    }
}

impl Eq for LinearCode {}

impl Hash for LinearCode {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.generator.cols().hash(state);
        self.generator.data().hash(state);
    }
}

impl PartialOrd for LinearCode {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LinearCode {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.length(), self.dimension(), self.generator.data()).cmp(&(
            other.length(),
            other.dimension(),
            other.generator.data(),
        ))
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] code over GF({}) {:?}",
            self.length(),
            self.dimension(),
            self.field().order(),
            self.generator.row_vecs()
        )
    }
}

/// Hull of a code under one inner product.
#[derive(Clone, Debug)]
pub struct HullReport {
    pub dimension: usize,
    /// Rows span `C ∩ C^⊥`.
    pub basis: Matrix,
    /// An LCD subcode with `hull ⊕ complement = C`.
    pub complement: LinearCode,
}

/// Output of [`hull_extensions`].
#[derive(Clone, Debug)]
pub struct Extensions {
    /// Number of admissible extension vectors before deduplication.
    pub vector_count: u64,
    pub codes: Vec<LinearCode>,
}

impl LinearCode {
    /// Row space of `rows`; rank-deficient input is fine.
    pub fn from_rows(rows: &Matrix) -> LinearCode {
        let e = rows.rref();
        let idx: Vec<usize> = (0..e.rank).collect();
        LinearCode {
            generator: e.reduced.select_rows(&idx),
            pivots: e.pivots,
        }
    }

    pub fn from_vectors<R: AsRef<[Elem]>>(
        field: &Arc<Field>,
        length: usize,
        rows: &[R],
    ) -> Result<LinearCode> {
        Ok(LinearCode::from_rows(&Matrix::from_rows(
            field, length, rows,
        )?))
    }

    pub fn zero(field: &Arc<Field>, length: usize) -> LinearCode {
        LinearCode::from_rows(&Matrix::zeros(field, 0, length))
    }

    pub fn full(field: &Arc<Field>, length: usize) -> LinearCode {
        LinearCode::from_rows(&Matrix::identity(field, length))
    }

    pub fn field(&self) -> &Arc<Field> {
        self.generator.field()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// The canonical (RREF) generator matrix.
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.length());
        let f = self.field();
        let mut r = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let s = r[pc];
            if s != 0 {
                for (x, &g) in r.iter_mut().zip(self.generator.row(i)) {
                    *x = f.sub(*x, f.mul(s, g));
                }
            }
        }
        r.iter().all(|&x| x == 0)
    }

    /// Adds the rows of `extra` and re-canonicalizes.
    pub fn extend(&self, extra: &[Elem]) -> LinearCode {
        let row = Matrix::from_rows(self.field(), self.length(), &[extra]).expect("same length");
        LinearCode::from_rows(&self.generator.vstack(&row))
    }

    /// `C·Q = { cQ : c ∈ C }`.
    pub fn transform(&self, q: &Matrix) -> LinearCode {
        LinearCode::from_rows(&self.generator.mul(q))
    }

    /// Image under the coordinate permutation sending position `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> LinearCode {
        let n = self.length();
        assert_eq!(perm.len(), n);
        let mut m = Matrix::zeros(self.field(), self.dimension(), n);
        for i in 0..self.dimension() {
            for (j, &pj) in perm.iter().enumerate() {
                m.set(i, pj, self.generator.get(i, j));
            }
        }
        LinearCode::from_rows(&m)
    }

    /// Number of codewords, `|F|^k`, if it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        (self.field().order() as u64).checked_pow(self.dimension() as u32)
    }

    /// Visits every codeword; errors when `|F|^k` exceeds `budget`.
    pub fn for_each_codeword(&self, budget: u64, mut visit: impl FnMut(&[Elem])) -> Result<()> {
        let q = self.field().order() as u64;
        let total = self
            .size()
            .filter(|&s| s <= budget)
            .ok_or_else(|| Error::BudgetExceeded {
                requested: format!("{q}^{}", self.dimension()),
                cap: budget.to_string(),
            })?;
        let k = self.dimension();
        let mut coeffs = vec![0 as Elem; k];
        for _ in 0..total {
            visit(&self.generator.apply(&coeffs));
            for c in coeffs.iter_mut() {
                if (*c as u32) + 1 < q as u32 {
                    *c += 1;
                    break;
                }
                *c = 0;
            }
        }
        Ok(())
    }
}

fn check_inner(field: &Field, length: usize, inner: InnerProduct) -> Result<()> {
    match inner {
        InnerProduct::Hermitian => field
            .base_order()
            .map(|_| ())
            .ok_or(Error::NoQuadraticSubfield(field.order())),
        InnerProduct::Symplectic if !length.is_multiple_of(2) => Err(Error::OddLength(length)),
        InnerProduct::Symplectic => Ok(()),
    }
}

/// `⟨x, y⟩` under the chosen form.
pub fn pairing(field: &Field, inner: InnerProduct, x: &[Elem], y: &[Elem]) -> Elem {
    match inner {
        InnerProduct::Hermitian => x.iter().zip(y).fold(0, |acc, (&a, &b)| {
            field.add(
                acc,
                field.mul(a, field.conj(b).expect("hermitian needs GF(q²)")),
            )
        }),
        InnerProduct::Symplectic => {
            let n = x.len() / 2;
            (0..n).fold(0, |acc, i| {
                let t = field.sub(field.mul(x[i], y[n + i]), field.mul(x[n + i], y[i]));
                field.add(acc, t)
            })
        }
    }
}

pub fn dual(code: &LinearCode, inner: InnerProduct) -> Result<LinearCode> {
    check_inner(code.field(), code.length(), inner)?;
    let g = code.generator();
    let rows = match inner {
        // y ∈ C^⊥H ⟺ G ȳᵀ = 0 ⟺ ȳ ∈ ker G
        InnerProduct::Hermitian => g.null_space().conj()?,
        InnerProduct::Symplectic => {
            let omega = Matrix::omega(code.field(), code.length() / 2);
            g.mul(&omega).null_space()
        }
    };
    Ok(LinearCode::from_rows(&rows))
}

/// `k − rank(G·form·G*)`.
pub fn hull_dimension(code: &LinearCode, inner: InnerProduct) -> Result<usize> {
    check_inner(code.field(), code.length(), inner)?;
    Ok(code.dimension() - gram(code.generator(), inner)?.rank())
}

pub fn is_lcd(code: &LinearCode, inner: InnerProduct) -> Result<bool> {
    Ok(hull_dimension(code, inner)? == 0)
}

pub fn is_self_orthogonal(code: &LinearCode, inner: InnerProduct) -> Result<bool> {
    Ok(hull_dimension(code, inner)? == code.dimension())
}

/// Basis of the intersection of two row spaces (Zassenhaus).
pub fn intersect(a: &LinearCode, b: &LinearCode) -> Matrix {
    let (ga, gb) = (a.generator(), b.generator());
    let top = ga.hstack(ga);
    let bottom = gb.hstack(&Matrix::zeros(a.field(), gb.rows(), gb.cols()));
    let e = top.vstack(&bottom).rref();
    let n = a.length();
    let right: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..e.rank).filter(|&i| e.pivots[i] >= n).collect();
    e.reduced.select_rows(&rows).select_cols(&right)
}

pub fn hull(code: &LinearCode, inner: InnerProduct) -> Result<HullReport> {
    let dimension = hull_dimension(code, inner)?;
    let basis = intersect(code, &dual(code, inner)?);
    assert_eq!(
        basis.rows(),
        dimension,
        "rank criterion and subspace intersection disagree"
    );
    // complete the hull basis with canonical generator rows, first fit
    let mut acc = basis.clone();
    let mut chosen = Vec::new();
    for i in 0..code.dimension() {
        let row = code.generator().select_rows(&[i]);
        let candidate = acc.vstack(&row);
        if candidate.rank() > acc.rank() {
            acc = candidate;
            chosen.push(i);
        }
    }
    let complement = LinearCode::from_rows(&code.generator().select_rows(&chosen));
    Ok(HullReport {
        dimension,
        basis,
        complement,
    })
}

/// A generator `G` of `C` with `G Ḡᵀ = diag(1^{k−ℓ}, 0^ℓ)`.
pub fn hermitian_normal_form(code: &LinearCode) -> Result<Matrix> {
    let h = hull(code, InnerProduct::Hermitian)?;
    let comp = h.complement.generator();
    let m = gram(comp, InnerProduct::Hermitian)?;
    let q = hermitian_unitarize(&m)?;
    Ok(q.mul(comp).vstack(&h.basis))
}

/// A generator of a symplectic LCD code whose Gram matrix is `diag(J₂, …)`.
pub fn symplectic_basis(code: &LinearCode) -> Result<Matrix> {
    let inner = InnerProduct::Symplectic;
    let ell = hull_dimension(code, inner)?;
    if ell != 0 {
        return Err(Error::NotLcd {
            inner,
            hull_dimension: ell,
        });
    }
    let g = code.generator();
    let (q, t) = skew_reduce(&gram(g, inner)?)?;
    debug_assert_eq!(t, code.dimension());
    Ok(q.mul(g))
}

/// The reference LCD code: `⟨e₁, …, e_k⟩` in GF(q²)^n (Hermitian), or the
/// `[2n, 2k]` code spanned by `(e_i | 0)` and `(0 | e_i)`, `i ≤ k`
/// (symplectic).
pub fn canonical_lcd(
    field: &Arc<Field>,
    inner: InnerProduct,
    n: usize,
    k: usize,
) -> Result<LinearCode> {
    if k > n {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds n = {n}")));
    }
    match inner {
        InnerProduct::Hermitian => {
            check_inner(field, n, inner)?;
            let mut g = Matrix::zeros(field, k, n);
            for i in 0..k {
                g.set(i, i, 1);
            }
            Ok(LinearCode::from_rows(&g))
        }
        InnerProduct::Symplectic => {
            let mut g = Matrix::zeros(field, 2 * k, 2 * n);
            for i in 0..k {
                g.set(2 * i, i, 1);
                g.set(2 * i + 1, n + i, 1);
            }
            Ok(LinearCode::from_rows(&g))
        }
    }
}

/// A form-preserving `Q` with `C1·Q = C2`, for two LCD codes of the same
/// shape.
pub fn transporter(c1: &LinearCode, c2: &LinearCode, inner: InnerProduct) -> Result<Matrix> {
    if c1.length() != c2.length() || c1.dimension() != c2.dimension() || c1.field() != c2.field() {
        return Err(Error::InvalidParameters(format!(
            "codes have shapes [{}, {}] and [{}, {}]",
            c1.length(),
            c1.dimension(),
            c2.length(),
            c2.dimension()
        )));
    }
    for c in [c1, c2] {
        let ell = hull_dimension(c, inner)?;
        if ell != 0 {
            return Err(Error::NotLcd {
                inner,
                hull_dimension: ell,
            });
        }
    }
    // stack adapted bases of the code and its dual; both frames have the same
    // Gram matrix, so Q₁⁻¹Q₂ preserves the form
    let frame = |c: &LinearCode| -> Result<Matrix> {
        let d = dual(c, inner)?;
        Ok(match inner {
            InnerProduct::Hermitian => {
                hermitian_normal_form(c)?.vstack(&hermitian_normal_form(&d)?)
            }
            InnerProduct::Symplectic => symplectic_basis(c)?.vstack(&symplectic_basis(&d)?),
        })
    };
    let q1 = frame(c1)?;
    let q2 = frame(c2)?;
    Ok(q1.inverse()?.mul(&q2))
}

/// Counts codewords `c` with `⟨c, c⟩_H = 0` by scanning the whole code.
pub fn so_codeword_count(code: &LinearCode, budget: u64) -> Result<u64> {
    check_inner(code.field(), code.length(), InnerProduct::Hermitian)?;
    let f = code.field().clone();
    let mut count = 0;
    code.for_each_codeword(budget, |c| {
        if pairing(&f, InnerProduct::Hermitian, c, c) == 0 {
            count += 1;
        }
    })?;
    Ok(count)
}

/// All codes `C ⊕ ⟨x⟩` with `x ∈ C^⊥ ∖ Hull(C)` (and `x` isotropic in the
/// Hermitian case). Every output has hull dimension one more than `C`.
pub fn hull_extensions(code: &LinearCode, inner: InnerProduct, budget: u64) -> Result<Extensions> {
    let d = dual(code, inner)?;
    let f = code.field().clone();
    let mut vector_count = 0u64;
    let mut codes = BTreeSet::new();
    d.for_each_codeword(budget, |x| {
        // x ∈ C^⊥ lies in the hull iff it lies in C
        if code.contains(x) {
            return;
        }
        if inner == InnerProduct::Hermitian && pairing(&f, inner, x, x) != 0 {
            return;
        }
        vector_count += 1;
        codes.insert(code.extend(x));
    })?;
    Ok(Extensions {
        vector_count,
        codes: codes.into_iter().collect(),
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn gf(q: u64) -> Arc<Field> {
        Field::from_order(q).unwrap()
    }

    fn code(f: &Arc<Field>, rows: &[&[Elem]]) -> LinearCode {
        LinearCode::from_vectors(f, rows[0].len(), rows).unwrap()
    }

    /// The seven quaternary [4,2] codes `(I₂ | M_i)` from the classification
    /// example, with ω ↦ 2, ω² ↦ 3.
    pub(crate) fn sample_codes(f: &Arc<Field>) -> Vec<LinearCode> {
        let ms: [[[Elem; 2]; 2]; 7] = [
            [[1, 3], [2, 2]],
            [[0, 3], [0, 0]],
            [[0, 0], [0, 1]],
            [[1, 3], [3, 3]],
            [[2, 3], [3, 2]],
            [[1, 2], [1, 3]],
            [[3, 2], [1, 2]],
        ];
        ms.iter()
            .map(|m| code(f, &[&[1, 0, m[0][0], m[0][1]], &[0, 1, m[1][0], m[1][1]]]))
            .collect()
    }

    #[test]
    fn from_rows_examples() {
        let f = gf(4);
        assert_eq!(
            LinearCode::from_rows(&Matrix::identity(&f, 3)).dimension(),
            3
        );
        assert_eq!(
            LinearCode::from_rows(&Matrix::zeros(&f, 2, 3)).dimension(),
            0
        );
        let c = code(&f, &[&[1, 0, 1, 3], &[0, 1, 2, 2]]);
        assert_eq!(c.dimension(), 2);
        let dup = code(&f, &[&[1, 2, 0], &[2, 3, 0]]);
        assert_eq!(dup.dimension(), 1);
    }

    #[test]
    fn dual_examples() {
        let f = gf(4);
        let c = code(&f, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let d = dual(&c, InnerProduct::Hermitian).unwrap();
        assert_eq!(d, code(&f, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]));
        assert_eq!(
            dual(&LinearCode::zero(&f, 3), InnerProduct::Hermitian).unwrap(),
            LinearCode::full(&f, 3)
        );
        let f2 = gf(2);
        let e1 = code(&f2, &[&[1, 0, 0, 0]]);
        let d = dual(&e1, InnerProduct::Symplectic).unwrap();
        assert!(d.contains(&[1, 0, 0, 0]));
        assert_eq!(d.dimension(), 3);
        assert_eq!(
            dual(&code(&f2, &[&[1, 0, 0]]), InnerProduct::Symplectic),
            Err(Error::OddLength(3))
        );
        assert!(dual(&e1, InnerProduct::Hermitian).is_err());
    }

    #[test]
    fn sample_codes_have_one_dimensional_hull() {
        let f = gf(4);
        for c in sample_codes(&f) {
            let h = hull(&c, InnerProduct::Hermitian).unwrap();
            assert_eq!(h.dimension, 1);
            assert_eq!(h.complement.dimension(), 1);
            assert!(is_lcd(&h.complement, InnerProduct::Hermitian).unwrap());
        }
    }

    #[test]
    fn hull_small_cases() {
        let f = gf(4);
        let c = code(&f, &[&[1, 0]]);
        assert_eq!(hull(&c, InnerProduct::Hermitian).unwrap().dimension, 0);
        let f2 = gf(2);
        let c = code(&f2, &[&[1, 0, 0, 0]]);
        let h = hull(&c, InnerProduct::Symplectic).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(h.complement.dimension(), 0);
    }

    #[test]
    fn normal_form_examples() {
        let f = gf(4);
        let lcd = code(&f, &[&[1, 0, 0], &[0, 1, 0]]);
        let g = hermitian_normal_form(&lcd).unwrap();
        assert_eq!(
            gram(&g, InnerProduct::Hermitian).unwrap(),
            Matrix::identity(&f, 2)
        );
        // (1, ω, ω²)... choose a self-orthogonal vector: 1 + 1 + 1 = 1 ≠ 0 in GF(2),
        // so use (1, 1, 0, 0) (norm sum 1 + 1 = 0)
        let so = code(&f, &[&[1, 1, 0, 0]]);
        let g = hermitian_normal_form(&so).unwrap();
        assert!(gram(&g, InnerProduct::Hermitian).unwrap().is_zero());
        let c1 = &sample_codes(&f)[0];
        let g = hermitian_normal_form(c1).unwrap();
        assert_eq!(
            gram(&g, InnerProduct::Hermitian).unwrap(),
            Matrix::partial_identity(&f, 1, 2)
        );
        assert_eq!(LinearCode::from_rows(&g), *c1);
    }

    #[test]
    fn symplectic_basis_examples() {
        let f = gf(2);
        let c = code(&f, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        let b = symplectic_basis(&c).unwrap();
        assert_eq!(
            gram(&b, InnerProduct::Symplectic).unwrap(),
            Matrix::j2_blocks(&f, 1, 2)
        );
        let f3 = gf(3);
        let full = LinearCode::full(&f3, 6);
        let b = symplectic_basis(&full).unwrap();
        assert_eq!(
            gram(&b, InnerProduct::Symplectic).unwrap(),
            Matrix::j2_blocks(&f3, 3, 6)
        );
        let so = code(&f, &[&[1, 0, 0, 0]]);
        assert!(matches!(symplectic_basis(&so), Err(Error::NotLcd { .. })));
    }

    #[test]
    fn canonical_lcd_examples() {
        let f = gf(4);
        let c = canonical_lcd(&f, InnerProduct::Hermitian, 2, 1).unwrap();
        assert_eq!(c, code(&f, &[&[1, 0]]));
        assert!(is_lcd(&c, InnerProduct::Hermitian).unwrap());
        let c = canonical_lcd(&f, InnerProduct::Hermitian, 4, 2).unwrap();
        assert_eq!(
            dual(&c, InnerProduct::Hermitian).unwrap(),
            code(&f, &[&[0, 0, 1, 0], &[0, 0, 0, 1]])
        );
        let f2 = gf(2);
        let c = canonical_lcd(&f2, InnerProduct::Symplectic, 2, 1).unwrap();
        assert_eq!(c, code(&f2, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]));
        assert_eq!(
            gram(c.generator(), InnerProduct::Symplectic).unwrap(),
            Matrix::j2_blocks(&f2, 1, 2)
        );
        assert!(canonical_lcd(&f2, InnerProduct::Symplectic, 2, 3).is_err());
        assert!(canonical_lcd(&f2, InnerProduct::Hermitian, 2, 1).is_err());
    }

    #[test]
    fn transporter_examples() {
        let f = gf(4);
        let e1 = code(&f, &[&[1, 0]]);
        let e2 = code(&f, &[&[0, 1]]);
        let q = transporter(&e1, &e2, InnerProduct::Hermitian).unwrap();
        assert_eq!(q.mul(&q.adjoint().unwrap()), Matrix::identity(&f, 2));
        assert_eq!(e1.transform(&q), e2);
        let q = transporter(&e1, &e1, InnerProduct::Hermitian).unwrap();
        assert_eq!(e1.transform(&q), e1);
        let so = code(&f, &[&[1, 1]]);
        assert!(matches!(
            transporter(&so, &e1, InnerProduct::Hermitian),
            Err(Error::NotLcd { .. })
        ));
        assert!(transporter(&e1, &code(&f, &[&[1, 0, 0]]), InnerProduct::Hermitian).is_err());
    }

    #[test]
    fn so_codeword_examples() {
        let f = gf(4);
        let lcd1 = code(&f, &[&[1, 0, 0]]);
        assert_eq!(
            so_codeword_count(&lcd1, DEFAULT_CODEWORD_BUDGET).unwrap(),
            1
        );
        let lcd2 = code(&f, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(
            so_codeword_count(&lcd2, DEFAULT_CODEWORD_BUDGET).unwrap(),
            10
        );
        let c1 = &sample_codes(&f)[0];
        assert_eq!(so_codeword_count(c1, DEFAULT_CODEWORD_BUDGET).unwrap(), 4);
        assert!(matches!(
            so_codeword_count(&LinearCode::full(&f, 11), DEFAULT_CODEWORD_BUDGET),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn hull_extension_examples() {
        let f = gf(4);
        let c = code(&f, &[&[1, 0, 0, 0]]);
        let ext = hull_extensions(&c, InnerProduct::Hermitian, DEFAULT_CODEWORD_BUDGET).unwrap();
        assert_eq!(ext.vector_count, 27);
        for e in &ext.codes {
            assert_eq!(e.dimension(), 2);
            assert_eq!(hull_dimension(e, InnerProduct::Hermitian).unwrap(), 1);
        }
        let f2 = gf(2);
        let z = LinearCode::zero(&f2, 4);
        let ext = hull_extensions(&z, InnerProduct::Symplectic, DEFAULT_CODEWORD_BUDGET).unwrap();
        assert_eq!(ext.vector_count, 15);
        assert_eq!(ext.codes.len(), 15);
        for e in &ext.codes {
            assert!(is_self_orthogonal(e, InnerProduct::Symplectic).unwrap());
        }
    }

    #[test]
    fn permute_and_contains() {
        let f = gf(3);
        let c = code(&f, &[&[1, 2, 0, 0]]);
        let p = c.permute(&[3, 2, 1, 0]);
        assert!(p.contains(&[0, 0, 2, 1]));
        assert!(!p.contains(&[1, 2, 0, 0]));
    }
}
