use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::InnerProduct;

use super::{gaussian_binomial, hull_mass, CountQuery};

/// A truncated product together with a rigorous bound on its distance from
/// the limit.
#[derive(Clone, Debug, PartialEq)]
pub struct Estimate {
    pub value: BigRational,
    /// Number of factors kept (the largest truncation index over all factors).
    pub terms: u32,
    pub error_bound: f64,
}

impl Estimate {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }

    pub fn to_decimal(&self, digits: usize) -> String {
        to_decimal(&self.value, digits)
    }
}

/// `g_{q,n} = ∏_{i=1}^{n} (1 − q^{−i})`.
pub fn g_finite(q: u64, n: u32) -> BigRational {
    let q = BigInt::from(q);
    let mut acc = BigRational::one();
    let mut qi = BigInt::one();
    for _ in 0..n {
        qi *= &q;
        acc *= BigRational::new(&qi - 1, qi.clone());
    }
    acc
}

/// `h_{q,ℓ} = ∏_{i=1}^{ℓ} (q^i − 1)`.
pub fn h_finite(q: u64, ell: u32) -> BigUint {
    let q = BigUint::from(q);
    let mut acc = BigUint::one();
    let mut qi = BigUint::one();
    for _ in 0..ell {
        qi *= &q;
        acc *= &qi - 1u32;
    }
    acc
}

// -log(g_m / g_∞) = Σ_{i>m} -log(1 - q^{-i}) ≤ Σ_{i>m} q^{-i}/(1 - q^{-i})
//                 ≤ q^{-m} / ((q - 1)(1 - q^{-(m+1)}))
fn tail_bound(q: u64, m: u32) -> f64 {
    let q = q as f64;
    let t = q.powi(-(m as i32));
    t / ((q - 1.0) * (1.0 - t / q))
}

fn truncation_for(q: u64, tolerance: f64) -> u32 {
    let mut m = 0;
    while tail_bound(q, m) > tolerance {
        m += 1;
    }
    m
}

/// `g_{q,∞}` to within `tolerance`. The truncated product overestimates the
/// limit, by at most the log-tail bound.
pub fn g_infinite(q: u64, tolerance: f64) -> Result<Estimate> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::NonPositiveTolerance);
    }
    if q < 2 {
        return Err(Error::InvalidParameters(format!("q = {q} < 2")));
    }
    let m = truncation_for(q, tolerance);
    Ok(Estimate {
        value: g_finite(q, m),
        terms: m,
        error_bound: tail_bound(q, m),
    })
}

/// Limit of the fraction of codes with hull dimension `ell` among all codes
/// of half the ambient dimension, as the length grows.
pub fn limit_density(inner: InnerProduct, q: u64, ell: u32, tolerance: f64) -> Result<Estimate> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::NonPositiveTolerance);
    }
    if q < 2 {
        return Err(Error::InvalidParameters(format!("q = {q} < 2")));
    }
    let qe = BigRational::from_integer(num_traits::pow(BigInt::from(q), ell as usize));
    let (numer_bases, denom_bases, h_base): (Vec<u64>, Vec<u64>, u64) = match inner {
        InnerProduct::Hermitian => (vec![q, q.pow(4)], vec![q * q, q * q], q * q),
        InnerProduct::Symplectic => (vec![q], vec![q * q], q),
    };
    let prefactor = qe / BigRational::from_integer(h_finite(h_base, ell).into());

    // Each truncated factor x_m satisfies x ≤ x_m ≤ x·(1+δ); with at most two
    // factors above and below the bar the relative error is ≤ (1+δ)² − 1.
    let mut per_factor = tolerance / 8.0;
    loop {
        let mut value = prefactor.clone();
        let mut terms = 0;
        let mut delta: f64 = 0.0;
        for (&b, up) in numer_bases
            .iter()
            .map(|b| (b, true))
            .chain(denom_bases.iter().map(|b| (b, false)))
        {
            let m = truncation_for(b, per_factor);
            terms = terms.max(m);
            delta = delta.max(tail_bound(b, m).exp_m1());
            let g = g_finite(b, m);
            if up {
                value *= g;
            } else {
                value /= g;
            }
        }
        let v = value.to_f64().unwrap_or(f64::INFINITY);
        let rel = (1.0 + delta).powi(2) - 1.0;
        let bound = v * (1.0 + delta).powi(2) * rel;
        if bound <= tolerance || per_factor < 1e-300 {
            return Ok(Estimate {
                value,
                terms,
                error_bound: bound,
            });
        }
        per_factor /= 16.0;
    }
}

/// Exact fraction `hull_mass / total codes` at finite size, as a float.
pub fn finite_ratio(query: &CountQuery) -> Result<f64> {
    let count = hull_mass(query)?.count;
    let total = gaussian_binomial(query.length() as i64, query.k as i64, query.field_order())?;
    if total.is_zero() {
        return Ok(0.0);
    }
    let r = BigRational::new(count.into(), total.into());
    Ok(r.to_f64().unwrap_or(f64::NAN))
}

/// Fixed-point decimal expansion, truncated toward zero.
pub fn to_decimal(value: &BigRational, digits: usize) -> String {
    let neg = value < &BigRational::zero();
    let abs = if neg { -value.clone() } else { value.clone() };
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (abs * BigRational::from_integer(scale)).to_integer();
    let s = scaled.to_string();
    let s = if s.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
    } else {
        s
    };
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}
