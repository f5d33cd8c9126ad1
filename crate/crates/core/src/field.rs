//! Table-driven arithmetic in small finite fields GF(p^e).
//!
//! Elements are encoded as integers in `[0, q)`: the element
//! `c_0 + c_1 α + ... + c_{e-1} α^{e-1}` (α a root of the modulus) is stored
//! as `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`. With this encoding `0 ↦ 0` and
//! `1 ↦ 1`, and the prime subfield is exactly the encodings below `p`.
//!
//! Orders are capped at 256 so every element fits in a `u8` and full
//! addition/multiplication tables stay cheap.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 256;

/// An encoded field element. Only meaningful together with its [`Field`].
pub type Elem = u8;

/// Default moduli (low-to-high coefficients) for the non-prime fields used
/// throughout the crate.
const DEFAULT_MODULI: &[(u32, u32, &[u32])] = &[
    (4, 2, &[1, 1, 1]),
    (8, 2, &[1, 1, 0, 1]),
    (9, 3, &[2, 2, 1]),
    (16, 2, &[1, 1, 0, 0, 1]),
    (25, 5, &[2, 4, 1]),
];

pub struct Field {
    p: u32,
    degree: u32,
    order: u32,
    modulus: Vec<u32>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    generator: Elem,
    exp: Vec<Elem>,
    log: Vec<u32>,
    // x ↦ x^{√q}, present only for even degree
    conj: Option<Vec<Elem>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("order", &self.order)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^e`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p as u32, e))
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over GF(p), low-to-high, used only while building tables.
fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    (1..p)
        .find(|&x| a * x % p == 1)
        .expect("nonzero residue mod a prime")
}

fn decode(v: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    let mut v = v;
    for _ in 0..e {
        out.push(v % p);
        v /= p;
    }
    out
}

fn encode(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let e = modulus.len() as u32 - 1;
    for d in 1..=e / 2 {
        // every monic polynomial of degree d
        for low in 0..p.pow(d) {
            let mut f = decode(low, p, d);
            f.push(1);
            if poly_rem(modulus, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds GF(p^e) from a monic irreducible modulus given low-to-high.
    pub fn new(p: u32, modulus: &[u32]) -> Result<Arc<Field>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus(format!(
                "coefficients must lie in [0, {p})"
            )));
        }
        if modulus.last() != Some(&1) {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        let degree = modulus.len() as u32 - 1;
        let order = (p as u64).pow(degree);
        if order > MAX_ORDER as u64 {
            return Err(Error::FieldTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        if !is_irreducible(modulus, p) {
            return Err(Error::InvalidModulus(format!(
                "{modulus:?} is reducible over GF({p})"
            )));
        }
        Ok(Arc::new(Self::build(
            p,
            degree,
            order as u32,
            modulus.to_vec(),
        )))
    }

    /// GF(q) with the default modulus: the table above for 4, 8, 9, 16, 25,
    /// `x` for prime fields, otherwise the smallest monic irreducible in
    /// encoding order.
    pub fn from_order(q: u64) -> Result<Arc<Field>> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_ORDER as u64 {
            return Err(Error::FieldTooLarge {
                order: q,
                max: MAX_ORDER,
            });
        }
        if let Some((_, _, m)) = DEFAULT_MODULI.iter().find(|(o, _, _)| *o as u64 == q) {
            return Field::new(p, m);
        }
        if e == 1 {
            return Field::new(p, &[0, 1]);
        }
        for low in 0..p.pow(e) {
            let mut m = decode(low, p, e);
            m.push(1);
            if is_irreducible(&m, p) {
                return Field::new(p, &m);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    fn build(p: u32, degree: u32, order: u32, modulus: Vec<u32>) -> Field {
        let q = order as usize;
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        let digits: Vec<Vec<u32>> = (0..order).map(|v| decode(v, p, degree)).collect();
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<u32> = digits[a]
                    .iter()
                    .zip(&digits[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q + b] = encode(&sum, p) as Elem;
                let mut prod = vec![0u32; 2 * degree as usize];
                for (i, x) in digits[a].iter().enumerate() {
                    for (j, y) in digits[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let r = poly_rem(&prod, &modulus, p);
                mul[a * q + b] = encode(&r, p) as Elem;
            }
        }
        let neg: Vec<Elem> = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as Elem)
            .collect();
        let mut inv = vec![0; q];
        for a in 1..q {
            inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as Elem;
        }

        let group = order - 1;
        let factors = prime_factors(group);
        let slow_pow = |a: usize, mut e: u32| {
            let mut acc = 1usize;
            let mut base = a;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul[acc * q + base] as usize;
                }
                base = mul[base * q + base] as usize;
                e >>= 1;
            }
            acc
        };
        let generator = (1..q)
            .find(|&g| factors.iter().all(|&r| slow_pow(g, group / r) != 1))
            .unwrap_or(1) as Elem;
        let mut exp = Vec::with_capacity(group as usize);
        let mut log = vec![0u32; q];
        let mut x = 1usize;
        for t in 0..group {
            exp.push(x as Elem);
            log[x] = t;
            x = mul[x * q + generator as usize] as usize;
        }

        let conj = degree.is_multiple_of(2).then(|| {
            let root = p.pow(degree / 2);
            (0..q).map(|a| slow_pow(a, root) as Elem).collect()
        });

        Field {
            p,
            degree,
            order,
            modulus,
            add,
            mul,
            neg,
            inv,
            generator,
            exp,
            log,
            conj,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The stored primitive element: the smallest encoding of multiplicative
    /// order `q - 1`.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    /// Order `√q` of the fixed field of the conjugation, when it exists.
    pub fn base_order(&self) -> Option<u32> {
        self.conj.as_ref().map(|_| self.p.pow(self.degree / 2))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(|v| v as Elem)
    }

    pub fn element(&self, value: u64) -> Result<Elem> {
        if value < self.order as u64 {
            Ok(value as Elem)
        } else {
            Err(Error::ElementOutOfRange {
                value,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order as usize + b as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            Err(Error::DivisionByZero(self.order))
        } else {
            Ok(self.inv[a as usize])
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply; negative exponents invert a nonzero base first.
    pub fn pow(&self, a: Elem, exponent: i64) -> Result<Elem> {
        let (mut base, mut e) = if exponent < 0 {
            (self.inv(a)?, exponent.unsigned_abs())
        } else {
            (a, exponent as u64)
        };
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Discrete logarithm to the stored generator, in `[0, q-1)`.
    pub fn dlog(&self, a: Elem) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero(self.order));
        }
        Ok(self.log[a as usize])
    }

    /// `g^t` for the stored generator.
    pub fn exp(&self, t: u64) -> Elem {
        self.exp[(t % (self.order as u64 - 1)) as usize]
    }

    fn conj_table(&self) -> Result<&[Elem]> {
        self.conj
            .as_deref()
            .ok_or(Error::NoQuadraticSubfield(self.order))
    }

    /// Conjugation `a ↦ a^{√q}` (the generator of Gal(GF(q)/GF(√q))).
    pub fn conj(&self, a: Elem) -> Result<Elem> {
        Ok(self.conj_table()?[a as usize])
    }

    /// `a^{|base|}`, checking that `self` is the quadratic extension of `base`.
    pub fn frobenius(&self, a: Elem, base: &Field) -> Result<Elem> {
        self.check_quadratic_over(base)?;
        self.conj(a)
    }

    pub fn check_quadratic_over(&self, base: &Field) -> Result<()> {
        if base.p != self.p || base.degree * 2 != self.degree {
            return Err(Error::NotQuadraticExtension {
                field: self.order,
                base: base.order,
            });
        }
        Ok(())
    }

    /// `a^{q+1}` where `q = √|F|`; always lands in the fixed subfield.
    pub fn norm(&self, a: Elem) -> Result<Elem> {
        let t = self.conj_table()?;
        Ok(self.mul(a, t[a as usize]))
    }

    pub fn in_subfield(&self, a: Elem) -> Result<bool> {
        Ok(self.conj(a)? == a)
    }

    /// Smallest encoding `x` with `x^{q+1} = c`; `c = 0` gives 0.
    pub fn solve_norm(&self, c: Elem) -> Result<Elem> {
        if !self.in_subfield(c)? {
            return Err(Error::NotInSubfield(c as u32));
        }
        if c == 0 {
            return Ok(0);
        }
        for x in self.elements() {
            if self.norm(x)? == c {
                return Ok(x);
            }
        }
        unreachable!("the norm map is onto the subfield")
    }

    /// Image of `base` inside `self`: maps each base encoding to the encoding
    /// of the same element here, by sending the base's α to the smallest
    /// root of its modulus.
    pub fn subfield_embedding(&self, base: &Field) -> Result<Vec<Elem>> {
        if base.p != self.p || !self.degree.is_multiple_of(base.degree) {
            return Err(Error::NotQuadraticExtension {
                field: self.order,
                base: base.order,
            });
        }
        let eval = |x: Elem, coeffs: &[u32]| {
            coeffs
                .iter()
                .rev()
                .fold(0 as Elem, |acc, &c| self.add(self.mul(acc, x), c as Elem))
        };
        let root = self
            .elements()
            .find(|&x| eval(x, &base.modulus) == 0)
            .expect("a subfield modulus splits in the extension");
        Ok(base
            .elements()
            .map(|v| eval(root, &decode(v as u32, base.p, base.degree)))
            .collect())
    }
}

/// A field element bound to its field, for callers that want mismatch
/// checking instead of raw encodings.
#[derive(Clone, Copy, Debug)]
pub struct FieldElement<'f> {
    field: &'f Field,
    value: Elem,
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.value == other.value
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Inverse of the first operand; the second is ignored.
    Inv,
    /// First operand raised to the given power; the second is ignored.
    Pow(i64),
}

impl<'f> FieldElement<'f> {
    pub fn new(field: &'f Field, value: u64) -> Result<Self> {
        Ok(FieldElement {
            field,
            value: field.element(value)?,
        })
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }
}

pub fn arith<'f>(
    a: FieldElement<'f>,
    b: FieldElement<'f>,
    op: ArithOp,
) -> Result<FieldElement<'f>> {
    if !std::ptr::eq(a.field, b.field) && a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    let f = a.field;
    let value = match op {
        ArithOp::Add => f.add(a.value, b.value),
        ArithOp::Sub => f.sub(a.value, b.value),
        ArithOp::Mul => f.mul(a.value, b.value),
        ArithOp::Div => f.div(a.value, b.value)?,
        ArithOp::Inv => f.inv(a.value)?,
        ArithOp::Pow(e) => f.pow(a.value, e)?,
    };
    Ok(FieldElement { field: f, value })
}
