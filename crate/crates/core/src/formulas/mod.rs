//! Closed-form counts, evaluated exactly.
//!
//! Every formula is a product of rational factors; products are accumulated
//! as [`BigRational`] and the final value is asserted to be an integer.
//!
//! Conventions: `q` is always the base parameter. Hermitian codes have
//! length `n` over GF(q²); symplectic codes have length `2n` over GF(q).

mod asymptotic;
mod jacobi;

pub use asymptotic::{
    finite_ratio, g_finite, g_infinite, h_finite, limit_density, to_decimal, Estimate,
};
pub use jacobi::{jacobi_sum_check, JacobiCheck, DEFAULT_JACOBI_BUDGET};

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::prime_power;
use crate::matrix::InnerProduct;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Unitary,
    Symplectic,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Unitary => "unitary",
            GroupKind::Symplectic => "symplectic",
        })
    }
}

/// Parameters of a hull-dimension count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountQuery {
    pub inner: InnerProduct,
    /// Base parameter: Hermitian codes live over GF(q²), symplectic over GF(q).
    pub q: u64,
    /// Hermitian length, or symplectic half-length.
    pub n: u32,
    pub k: u32,
    pub ell: u32,
}

impl CountQuery {
    pub fn new(inner: InnerProduct, q: u64, n: u32, k: u32, ell: u32) -> Self {
        CountQuery {
            inner,
            q,
            n,
            k,
            ell,
        }
    }

    /// Code length: `n` (Hermitian) or `2n` (symplectic).
    pub fn length(&self) -> u32 {
        match self.inner {
            InnerProduct::Hermitian => self.n,
            InnerProduct::Symplectic => 2 * self.n,
        }
    }

    /// Order of the field the codes live over.
    pub fn field_order(&self) -> u64 {
        match self.inner {
            InnerProduct::Hermitian => self.q * self.q,
            InnerProduct::Symplectic => self.q,
        }
    }
}

/// Which closed form produced a count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaId {
    HermitianLcd,
    HermitianHull,
    HermitianSelfOrthogonal,
    SymplecticLcd,
    SymplecticHull,
    SymplecticSelfOrthogonal,
    /// Parameters no code can satisfy (parity or hull-size bounds).
    Empty,
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant serializes");
        f.write_str(s.as_str().expect("string tag"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub count: BigUint,
    pub formula: FormulaId,
}

fn pow(q: u64, e: u64) -> BigInt {
    num_traits::pow(BigInt::from(q), e as usize)
}

fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

fn into_count(r: BigRational) -> BigUint {
    assert!(r.is_integer(), "closed form produced a non-integer: {r}");
    assert!(
        !r.is_negative(),
        "closed form produced a negative count: {r}"
    );
    r.to_integer().to_biguint().expect("nonnegative")
}

fn check_q(q: u64) -> Result<()> {
    prime_power(q).map(|_| ()).ok_or(Error::NotPrimePower(q))
}

/// Number of `k`-dimensional subspaces of a `n`-dimensional space over a
/// field with `base` elements.
pub fn gaussian_binomial(n: i64, k: i64, base: u64) -> Result<BigUint> {
    if k < 0 || n < 0 {
        return Err(Error::InvalidParameters(format!(
            "negative argument ({n}, {k})"
        )));
    }
    if base < 2 {
        return Err(Error::InvalidParameters(format!("base {base} < 2")));
    }
    if k > n {
        return Ok(BigUint::zero());
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as u64 {
        num *= pow(base, n as u64) - pow(base, i);
        den *= pow(base, k as u64) - pow(base, i);
    }
    Ok(into_count(ratio(num, den)))
}

/// `|U_n(q²)|` or `|Sp_{2n}(q)|`.
pub fn group_order(kind: GroupKind, n: u32, q: u64) -> BigUint {
    let n = n as u64;
    let mut acc = match kind {
        GroupKind::Unitary => pow(q, n * n.saturating_sub(1) / 2),
        GroupKind::Symplectic => pow(q, n * n),
    };
    for i in 1..=n {
        acc *= match kind {
            GroupKind::Unitary => pow(q, i) - sign(i as i64),
            GroupKind::Symplectic => pow(q, 2 * i) - 1,
        };
    }
    acc.to_biguint().expect("group orders are positive")
}

/// Solutions of `x₁^{q+1} + … + x_n^{q+1} = a` in GF(q²)^n, for `a = 0` or
/// any fixed `a ≠ 0` in GF(q).
pub fn diagonal_count(q: u64, n: u32, a_is_zero: bool) -> BigUint {
    if n == 0 {
        return if a_is_zero {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let n = n as u64;
    let lead = pow(q, n - 1);
    let odd = n % 2 == 1;
    let inner: BigInt = match (a_is_zero, odd) {
        (true, true) => pow(q, n) - q + 1,
        (true, false) => pow(q, n) + q - 1,
        (false, true) => pow(q, n) + 1,
        (false, false) => pow(q, n) - 1,
    };
    (lead * inner).to_biguint().expect("counts are nonnegative")
}

/// Hermitian LCD `[n, k]` codes over GF(q²), from the unitary orbit size.
pub fn hermitian_lcd_count(q: u64, n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let (n, k) = (n as i64, k as i64);
    let mut acc = BigRational::from_integer(pow(q, (k * (n - k)) as u64));
    for i in 1..=k {
        let top = n - k + i;
        acc *= ratio(pow(q, top as u64) - sign(top), pow(q, i as u64) - sign(i));
    }
    into_count(acc)
}

/// Codes with Hermitian hull of dimension `ell`, as the LCD count times the
/// product of the hull-raising factors (the two parity branches are the
/// factorizations of `N₀(m) − 1`).
pub fn hermitian_hull_count(q: u64, n: u32, k: u32, ell: u32) -> BigUint {
    if ell > k || k > n || ell > n - k {
        return BigUint::zero();
    }
    let k0 = k - ell;
    let (n, k0i) = (n as i64, k0 as i64);
    let odd = (n - k0i) % 2 == 1;
    let mut acc = BigRational::from_integer(hermitian_lcd_count(q, n as u32, k0).into());
    for i in 1..=ell as i64 {
        let m = (n - k0i - 2 * i + 2) as u64;
        let num = if odd {
            (pow(q, m) + 1) * (pow(q, m - 1) - 1)
        } else {
            (pow(q, m) - 1) * (pow(q, m - 1) + 1)
        };
        let den = pow(q, 2 * k0 as u64) * (pow(q, 2 * i as u64) - 1);
        acc *= ratio(num, den);
    }
    into_count(acc)
}

/// Hermitian self-orthogonal `[n, k]` codes over GF(q²).
pub fn hermitian_self_orthogonal_count(q: u64, n: u32, k: u32) -> BigUint {
    if 2 * k > n {
        return BigUint::zero();
    }
    let n = n as i64;
    let mut acc = BigRational::one();
    for i in 1..=k as i64 {
        let inner = pow(q, (n - 2 * i + 2) as u64) + sign(n) * BigInt::from(q - 1);
        let num = pow(q, (n - 2 * i + 1) as u64) * inner - 1;
        acc *= ratio(num, pow(q, 2 * i as u64) - 1);
    }
    into_count(acc)
}

/// Symplectic LCD `[2n, 2k]` codes over GF(q).
pub fn symplectic_lcd_count(q: u64, n: u32, half_k: u32) -> BigUint {
    if half_k > n {
        return BigUint::zero();
    }
    let e = 2 * half_k as u64 * (n - half_k) as u64;
    let g = gaussian_binomial(n as i64, half_k as i64, q * q).expect("valid arguments");
    pow(q, e).to_biguint().unwrap() * g
}

/// Codes `[2n, k]` over GF(q) with symplectic hull of dimension `ell`: the
/// LCD count of dimension `k − ℓ` times `ℓ` hull-raising factors
/// `(q^{2n−2k₀−2i+2} − 1) / (q^{2k₀+i} − q^{2k₀})`.
pub fn symplectic_hull_count(q: u64, n: u32, k: u32, ell: u32) -> BigUint {
    if ell > k || k > 2 * n || (k - ell) % 2 == 1 || ell > 2 * n - k {
        return BigUint::zero();
    }
    let k0 = ((k - ell) / 2) as u64;
    let n = n as u64;
    let mut acc = BigRational::from_integer(symplectic_lcd_count(q, n as u32, k0 as u32).into());
    for i in 1..=ell as u64 {
        let num = pow(q, 2 * n - 2 * k0 - 2 * i + 2) - 1;
        let den = pow(q, 2 * k0 + i) - pow(q, 2 * k0);
        acc *= ratio(num, den);
    }
    into_count(acc)
}

/// The alternative hull-raising product with factors
/// `(q^{2n−k−i+2} − 1) / (q^k − q^{2k₀})`. It agrees with
/// [`symplectic_hull_count`] only in its last factor and does not count
/// codes; it is kept so tests can show where it goes wrong.
pub fn symplectic_hull_count_alternative(q: u64, n: u32, k: u32, ell: u32) -> BigRational {
    let k0 = ((k - ell) / 2) as i64;
    let (n, k) = (n as i64, k as i64);
    let mut acc = BigRational::from_integer(symplectic_lcd_count(q, n as u32, k0 as u32).into());
    for i in 1..=ell as i64 {
        let num = pow(q, (2 * n - k - i + 2) as u64) - 1;
        let den = pow(q, k as u64) - pow(q, 2 * k0 as u64);
        acc *= ratio(num, den);
    }
    acc
}

/// Symplectic self-orthogonal `[2n, k]` codes over GF(q).
pub fn symplectic_self_orthogonal_count(q: u64, n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigRational::one();
    for i in 1..=k as u64 {
        acc *= ratio(pow(q, 2 * n as u64 - 2 * i + 2) - 1, pow(q, i) - 1);
    }
    into_count(acc)
}

/// Symplectic self-orthogonal `[2n, k]` codes containing a fixed nonzero
/// vector.
pub fn sso_containing_count(q: u64, n: u32, k: u32) -> Result<BigUint> {
    check_q(q)?;
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    if k > n {
        return Ok(BigUint::zero());
    }
    let mut acc = BigRational::one();
    for i in 1..k as u64 {
        acc *= ratio(pow(q, 2 * n as u64 - 2 * i) - 1, pow(q, i) - 1);
    }
    Ok(into_count(acc))
}

/// Number of codes with the queried shape and hull dimension.
pub fn hull_mass(query: &CountQuery) -> Result<CountReport> {
    let CountQuery {
        inner,
        q,
        n,
        k,
        ell,
    } = *query;
    check_q(q)?;
    let length = query.length();
    if k > length {
        return Err(Error::InvalidParameters(format!(
            "dimension {k} exceeds length {length}"
        )));
    }
    if ell > k {
        return Err(Error::InvalidParameters(format!(
            "hull dimension {ell} exceeds dimension {k}"
        )));
    }
    let empty = CountReport {
        count: BigUint::zero(),
        formula: FormulaId::Empty,
    };
    let report = match inner {
        InnerProduct::Hermitian => {
            if ell > length - k {
                return Ok(empty);
            }
            if ell == 0 {
                CountReport {
                    count: hermitian_lcd_count(q, n, k),
                    formula: FormulaId::HermitianLcd,
                }
            } else if ell == k {
                CountReport {
                    count: hermitian_self_orthogonal_count(q, n, k),
                    formula: FormulaId::HermitianSelfOrthogonal,
                }
            } else {
                CountReport {
                    count: hermitian_hull_count(q, n, k, ell),
                    formula: FormulaId::HermitianHull,
                }
            }
        }
        InnerProduct::Symplectic => {
            if (k - ell) % 2 == 1 || ell > length - k {
                return Ok(empty);
            }
            if ell == 0 {
                CountReport {
                    count: symplectic_lcd_count(q, n, k / 2),
                    formula: FormulaId::SymplecticLcd,
                }
            } else if ell == k {
                CountReport {
                    count: symplectic_self_orthogonal_count(q, n, k),
                    formula: FormulaId::SymplecticSelfOrthogonal,
                }
            } else {
                CountReport {
                    count: symplectic_hull_count(q, n, k, ell),
                    formula: FormulaId::SymplecticHull,
                }
            }
        }
    };
    Ok(report)
}

/// Total number of `[length, k]` codes for the query's field.
pub fn total_codes(query: &CountQuery) -> BigUint {
    gaussian_binomial(query.length() as i64, query.k as i64, query.field_order())
        .expect("nonnegative arguments")
}
