//! Exhaustive enumeration at desk scale: every code of a given shape, every
//! element of a small unitary or symplectic group, and permutation classes.
//! These are the independent oracles the closed forms are checked against.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::code::{canonical_lcd, hull_dimension, is_self_orthogonal, pairing, LinearCode};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::formulas::{self, gaussian_binomial, hull_mass, CountQuery, GroupKind};
use crate::matrix::{InnerProduct, Matrix};

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Most codes a single enumeration may visit.
    pub codes: u64,
    /// Most candidate matrices a group enumeration may stand for.
    pub group_candidates: u64,
    /// Most coordinate permutations a classification may scan.
    pub permutations: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            codes: 10_000_000,
            group_candidates: 1 << 24,
            permutations: 1_000_000,
        }
    }
}

fn exceeded(requested: impl ToString, cap: u64) -> Error {
    Error::BudgetExceeded {
        requested: requested.to_string(),
        cap: cap.to_string(),
    }
}

/// Field of a census: GF(q²) for Hermitian, GF(q) for symplectic.
pub fn census_field(inner: InnerProduct, q: u64) -> Result<Arc<Field>> {
    match inner {
        InnerProduct::Hermitian => {
            Field::from_order(q.checked_mul(q).ok_or(Error::NotPrimePower(q))?)
        }
        InnerProduct::Symplectic => Field::from_order(q),
    }
}

/// Every `[length, k]` code over `field`, once each, as RREF generators.
pub struct Codes {
    field: Arc<Field>,
    length: usize,
    subsets: itertools::Combinations<std::ops::Range<usize>>,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<Elem>,
    fresh: bool,
    done: bool,
}

impl Codes {
    fn load_subset(&mut self) -> bool {
        match self.subsets.next() {
            Some(p) => {
                self.free = p
                    .iter()
                    .enumerate()
                    .flat_map(|(r, &pc)| {
                        let p = &p;
                        (pc + 1..self.length)
                            .filter(move |c| !p.contains(c))
                            .map(move |c| (r, c))
                    })
                    .collect();
                self.digits = vec![0; self.free.len()];
                self.pivots = p;
                self.fresh = true;
                true
            }
            None => false,
        }
    }
}

impl Iterator for Codes {
    type Item = LinearCode;

    fn next(&mut self) -> Option<LinearCode> {
        if self.done {
            return None;
        }
        if !self.fresh {
            let order = self.field.order();
            let mut carried = true;
            for d in self.digits.iter_mut() {
                if (*d as u32) + 1 < order {
                    *d += 1;
                    carried = false;
                    break;
                }
                *d = 0;
            }
            if carried && !self.load_subset() {
                self.done = true;
                return None;
            }
        }
        self.fresh = false;
        let mut g = Matrix::zeros(&self.field, self.pivots.len(), self.length);
        for (r, &pc) in self.pivots.iter().enumerate() {
            g.set(r, pc, 1);
        }
        for (&(r, c), &v) in self.free.iter().zip(&self.digits) {
            g.set(r, c, v);
        }
        Some(LinearCode::from_rows(&g))
    }
}

pub fn enumerate_codes(field: &Arc<Field>, length: usize, k: usize, caps: &Caps) -> Result<Codes> {
    let total = gaussian_binomial(length as i64, k as i64, field.order() as u64)?;
    if total > BigUint::from(caps.codes) {
        return Err(exceeded(total, caps.codes));
    }
    let mut it = Codes {
        field: field.clone(),
        length,
        subsets: (0..length).combinations(k),
        pivots: Vec::new(),
        free: Vec::new(),
        digits: Vec::new(),
        fresh: false,
        done: false,
    };
    if !it.load_subset() {
        it.done = true;
    }
    Ok(it)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub ell: u32,
    pub enumerated: u64,
    #[serde(serialize_with = "as_decimal")]
    pub formula: BigUint,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub inner: InnerProduct,
    pub q: u64,
    pub n: u32,
    pub k: u32,
    pub length: usize,
    pub rows: Vec<CensusRow>,
    pub total: u64,
}

impl CensusReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }

    pub fn count(&self, ell: u32) -> Option<u64> {
        self.rows
            .iter()
            .find(|r| r.ell == ell)
            .map(|r| r.enumerated)
    }
}

pub(crate) fn as_decimal<S: serde::Serializer>(
    v: &BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn check_shape(inner: InnerProduct, q: u64, n: u32, k: u32) -> Result<()> {
    let length = CountQuery::new(inner, q, n, k, 0).length();
    if k > length {
        return Err(Error::InvalidParameters(format!(
            "dimension {k} exceeds length {length}"
        )));
    }
    Ok(())
}

/// Hull dimensions of every code of the shape, tallied against the closed
/// forms. `q` and `n` follow the [`CountQuery`] convention.
pub fn hull_census(
    inner: InnerProduct,
    q: u64,
    n: u32,
    k: u32,
    caps: &Caps,
) -> Result<CensusReport> {
    check_shape(inner, q, n, k)?;
    let field = census_field(inner, q)?;
    let query = CountQuery::new(inner, q, n, k, 0);
    let length = query.length() as usize;
    let mut tally = vec![0u64; k as usize + 1];
    for code in enumerate_codes(&field, length, k as usize, caps)? {
        tally[hull_dimension(&code, inner)?] += 1;
    }
    let rows = tally
        .iter()
        .enumerate()
        .map(|(ell, &enumerated)| {
            let formula = hull_mass(&CountQuery {
                ell: ell as u32,
                ..query
            })?
            .count;
            Ok(CensusRow {
                ell: ell as u32,
                enumerated,
                matches: formula == BigUint::from(enumerated),
                formula,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CensusReport {
        inner,
        q,
        n,
        k,
        length,
        total: tally.iter().sum(),
        rows,
    })
}

/// Every element of `U_n(q²)` (over GF(q²)) or `Sp_{2n}(q)` (over GF(q)),
/// found by extending row prefixes and keeping matrices that satisfy the
/// defining identity.
pub fn enumerate_group(kind: GroupKind, n: u32, q: u64, caps: &Caps) -> Result<Vec<Matrix>> {
    let (inner, dim) = match kind {
        GroupKind::Unitary => (InnerProduct::Hermitian, n as usize),
        GroupKind::Symplectic => (InnerProduct::Symplectic, 2 * n as usize),
    };
    let field = census_field(inner, q)?;
    let order = field.order() as u128;
    let candidates = (dim * dim) as u32;
    match order.checked_pow(candidates) {
        Some(c) if c <= caps.group_candidates as u128 => {}
        _ => {
            return Err(exceeded(
                format!("{order}^{candidates}"),
                caps.group_candidates,
            ))
        }
    }
    let form = match kind {
        GroupKind::Unitary => Matrix::identity(&field, dim),
        GroupKind::Symplectic => Matrix::omega(&field, n as usize),
    };
    let vectors: Vec<Vec<Elem>> = if dim == 0 {
        vec![vec![]]
    } else {
        (0..dim)
            .map(|_| field.elements().collect::<Vec<_>>())
            .multi_cartesian_product()
            .collect()
    };

    let mut out = Vec::new();
    let mut rows: Vec<usize> = Vec::with_capacity(dim);
    // depth-first over rows, pruning on the entries of Q·F·Q* already fixed
    fn extend(
        rows: &mut Vec<usize>,
        vectors: &[Vec<Elem>],
        field: &Field,
        inner: InnerProduct,
        form: &Matrix,
        dim: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rows.len() == dim {
            out.push(rows.clone());
            return;
        }
        let i = rows.len();
        for (idx, v) in vectors.iter().enumerate() {
            let ok = (0..i).all(|j| {
                pairing(field, inner, v, &vectors[rows[j]]) == form.get(i, j)
                    && pairing(field, inner, &vectors[rows[j]], v) == form.get(j, i)
            }) && pairing(field, inner, v, v) == form.get(i, i);
            if ok {
                rows.push(idx);
                extend(rows, vectors, field, inner, form, dim, out);
                rows.pop();
            }
        }
    }
    let mut found = Vec::new();
    extend(&mut rows, &vectors, &field, inner, &form, dim, &mut found);
    for idx in found {
        let picked: Vec<&Vec<Elem>> = idx.iter().map(|&i| &vectors[i]).collect();
        let m = Matrix::from_rows(&field, dim, &picked)?;
        let image = match kind {
            GroupKind::Unitary => m.mul(&m.adjoint()?),
            GroupKind::Symplectic => m.mul(&form).mul(&m.transpose()),
        };
        assert_eq!(
            image, form,
            "row-wise filter disagrees with the defining identity"
        );
        out.push(m);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerReport {
    pub group_order: u64,
    pub orbit_size: u64,
    pub stabilizer_size: u64,
    /// LCD codes of the same shape, by exhaustive hull census.
    pub lcd_census: u64,
    /// Order of the product of the two smaller groups acting on the code
    /// and on its dual.
    #[serde(serialize_with = "as_decimal")]
    pub block_product: BigUint,
    pub product_equals_group_order: bool,
}

impl StabilizerReport {
    pub fn holds(&self) -> bool {
        self.product_equals_group_order
            && self.orbit_size == self.lcd_census
            && BigUint::from(self.stabilizer_size) == self.block_product
    }
}

/// Orbit and stabilizer of the reference LCD code of dimension `k`
/// (Hermitian) or `2k` (symplectic) under the full group.
pub fn stabilizer_check(
    inner: InnerProduct,
    q: u64,
    n: u32,
    k: u32,
    caps: &Caps,
) -> Result<StabilizerReport> {
    if k > n {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds n = {n}")));
    }
    let kind = match inner {
        InnerProduct::Hermitian => GroupKind::Unitary,
        InnerProduct::Symplectic => GroupKind::Symplectic,
    };
    let group = enumerate_group(kind, n, q, caps)?;
    let field = census_field(inner, q)?;
    let c = canonical_lcd(&field, inner, n as usize, k as usize)?;
    let mut orbit = HashSet::new();
    let mut stabilizer = 0u64;
    for g in &group {
        let image = c.transform(g);
        if image == c {
            stabilizer += 1;
        }
        orbit.insert(image);
    }
    let mut lcd_census = 0u64;
    for code in enumerate_codes(&field, c.length(), c.dimension(), caps)? {
        if hull_dimension(&code, inner)? == 0 {
            lcd_census += 1;
        }
    }
    let group_order = group.len() as u64;
    let orbit_size = orbit.len() as u64;
    Ok(StabilizerReport {
        group_order,
        orbit_size,
        stabilizer_size: stabilizer,
        lcd_census,
        block_product: formulas::group_order(kind, k, q) * formulas::group_order(kind, n - k, q),
        product_equals_group_order: stabilizer * orbit_size == group_order,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeClass {
    /// Lexicographically least code in the class.
    pub representative: LinearCode,
    pub class_size: u64,
    pub aut_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub classes: Vec<CodeClass>,
    /// `Σ length!/|Aut(C)|` over the classes.
    pub mass_lhs: BigRational,
    /// Closed-form count of codes with this hull dimension.
    pub mass_rhs: BigUint,
    /// Codes with this hull dimension found by enumeration.
    pub census_count: u64,
}

impl ClassificationReport {
    pub fn matches(&self) -> bool {
        self.mass_lhs == BigRational::from_integer(BigInt::from(self.mass_rhs.clone()))
            && BigUint::from(self.census_count) == self.mass_rhs
    }
}

/// Splits the codes with hull dimension `ell` into coordinate-permutation
/// classes.
pub fn classify(
    inner: InnerProduct,
    q: u64,
    n: u32,
    k: u32,
    ell: u32,
    caps: &Caps,
) -> Result<ClassificationReport> {
    check_shape(inner, q, n, k)?;
    let field = census_field(inner, q)?;
    let query = CountQuery::new(inner, q, n, k, ell);
    let length = query.length() as usize;
    let perms_total: u64 = (1..=length as u64).product();
    if perms_total > caps.permutations {
        return Err(exceeded(format!("{length}!"), caps.permutations));
    }
    let mut pool = Vec::new();
    for code in enumerate_codes(&field, length, k as usize, caps)? {
        if hull_dimension(&code, inner)? == ell as usize {
            pool.push(code);
        }
    }
    let perms: Vec<Vec<usize>> = (0..length).permutations(length).collect();
    let mut seen = HashSet::new();
    let mut classes = Vec::new();
    for code in &pool {
        if seen.contains(code) {
            continue;
        }
        let mut images = HashSet::new();
        let mut aut = 0u64;
        for p in &perms {
            let image = code.permute(p);
            if &image == code {
                aut += 1;
            }
            images.insert(image);
        }
        let class_size = images.len() as u64;
        assert_eq!(
            class_size * aut,
            perms_total,
            "orbit-stabilizer fails for {code:?}"
        );
        let representative = images.iter().min().expect("orbit is nonempty").clone();
        seen.extend(images);
        classes.push(CodeClass {
            representative,
            class_size,
            aut_order: aut,
        });
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    let mass_lhs = classes.iter().fold(BigRational::zero(), |acc, c| {
        acc + BigRational::new(BigInt::from(perms_total), BigInt::from(c.aut_order))
    });
    Ok(ClassificationReport {
        classes,
        mass_lhs,
        mass_rhs: hull_mass(&query)?.count,
        census_count: pool.len() as u64,
    })
}

/// Symplectic self-orthogonal `[2n, k]` codes over GF(q) containing `u`.
pub fn sso_containing_census(q: u64, n: u32, k: u32, u: &[Elem], caps: &Caps) -> Result<u64> {
    let field = Field::from_order(q)?;
    let length = 2 * n as usize;
    if u.len() != length {
        return Err(Error::Shape(format!(
            "vector has length {}, need {length}",
            u.len()
        )));
    }
    if let Some(&bad) = u.iter().find(|&&x| x as u32 >= field.order()) {
        return Err(Error::ElementOutOfRange {
            value: bad as u64,
            order: field.order(),
        });
    }
    if u.iter().all(|&x| x == 0) {
        return Err(Error::InvalidParameters(
            "the fixed vector must be nonzero".into(),
        ));
    }
    let mut count = 0;
    for code in enumerate_codes(&field, length, k as usize, caps)? {
        if code.contains(u) && is_self_orthogonal(&code, InnerProduct::Symplectic)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Solutions of `x₁^{q+1} + … + xₙ^{q+1} = a` in GF(q²)ⁿ for every `a`,
/// by scanning all tuples. Keys are GF(q²) encodings of the subfield values.
pub fn diagonal_census(q: u64, n: u32, caps: &Caps) -> Result<BTreeMap<Elem, u64>> {
    let field = census_field(InnerProduct::Hermitian, q)?;
    let total = (field.order() as u128).checked_pow(n);
    if total.is_none_or(|t| t > caps.codes as u128) {
        return Err(exceeded(format!("{}^{n}", field.order()), caps.codes));
    }
    let norms: Vec<Elem> = field
        .elements()
        .map(|x| field.norm(x))
        .collect::<Result<_>>()?;
    let mut out: BTreeMap<Elem, u64> = field
        .elements()
        .filter(|&a| field.in_subfield(a).unwrap_or(false))
        .map(|a| (a, 0))
        .collect();
    let mut sums: HashMap<Elem, u64> = HashMap::from([(0, 1)]);
    for _ in 0..n {
        let mut next = HashMap::new();
        for (&s, &c) in &sums {
            for x in field.elements() {
                *next.entry(field.add(s, norms[x as usize])).or_insert(0) += c;
            }
        }
        sums = next;
    }
    for (a, c) in sums {
        *out.get_mut(&a).expect("norm sums stay in the subfield") += c;
    }
    Ok(out)
}
