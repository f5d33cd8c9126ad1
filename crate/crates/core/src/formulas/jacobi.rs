//! Diagonal-equation counts recovered from Jacobi sums of a character of
//! order `q + 1` on GF(q²)*, summed exactly in the cyclotomic integers.

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::field::Field;

use super::diagonal_count;

pub const DEFAULT_JACOBI_BUDGET: u64 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiCheck {
    pub lhs_zero_sum: BigInt,
    pub lhs_one_sum: BigInt,
    pub rhs_zero: BigUint,
    pub rhs_one: BigUint,
}

impl JacobiCheck {
    pub fn holds(&self) -> bool {
        self.lhs_zero_sum == BigInt::from(self.rhs_zero.clone())
            && self.lhs_one_sum == BigInt::from(self.rhs_one.clone())
    }
}

fn poly_divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd] / lead;
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

fn cyclotomic(m: usize) -> Vec<i64> {
    let mut p = vec![0i64; m + 1];
    p[0] = -1;
    p[m] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = poly_divide_exact(&p, &cyclotomic(d));
        }
    }
    p
}

// Reduce an element of Z[x]/(x^m − 1) modulo Φ_m and require a constant.
fn rational_value(coeffs: &[i64], phi: &[i64]) -> Option<i64> {
    let mut r = coeffs.to_vec();
    let dd = phi.len() - 1;
    for i in (dd..r.len()).rev() {
        let c = r[i];
        if c != 0 {
            for (j, &d) in phi.iter().enumerate() {
                r[i - dd + j] -= c * d;
            }
        }
    }
    r[1..dd.min(r.len())]
        .iter()
        .all(|&c| c == 0)
        .then_some(r[0])
}

/// Sum `q^{2n−2} + Σ J_a(λ^{j₁}, …, λ^{jₙ})` for `a = 0` (indices with
/// `(q+1) | Σ j`) and `a = 1` (all indices), compared with the closed forms.
pub fn jacobi_sum_check(q: u64, n: u32, budget: u64) -> Result<JacobiCheck> {
    if n == 0 {
        return Err(Error::InvalidParameters("n must be at least 1".into()));
    }
    let order = q.checked_mul(q).filter(|&o| o <= 256).ok_or_else(|| {
        Error::InvalidParameters(format!("q² = {} exceeds 256", q as u128 * q as u128))
    })?;
    let field = Field::from_order(order)?;
    let m = (q + 1) as usize;
    let work = (q as u128).pow(n) * (order as u128).pow(n - 1);
    if work > budget as u128 {
        return Err(Error::BudgetExceeded {
            requested: work.to_string(),
            cap: budget.to_string(),
        });
    }

    // exponent of λ on each nonzero element: λ(g^t) = ζ^t with ζ of order q+1
    let log: Vec<Option<usize>> = field
        .elements()
        .map(|c| field.dlog(c).ok().map(|t| t as usize % m))
        .collect();

    let one = field.exp(0);
    let mut zero_sum = vec![0i64; m];
    let mut one_sum = vec![0i64; m];
    let nn = n as usize;
    let mut js = vec![1usize; nn];
    let mut cs = vec![0u8; nn.saturating_sub(1)];
    loop {
        let jtotal: usize = js.iter().sum();
        let want_zero = jtotal.is_multiple_of(m);
        // enumerate c_1..c_{n-1}; c_n is forced by the target
        loop {
            let mut partial = 0u8;
            let mut e = 0usize;
            let mut alive = true;
            for (i, &c) in cs.iter().enumerate() {
                match log[c as usize] {
                    Some(t) => e += js[i] * t,
                    None => alive = false,
                }
                partial = field.add(partial, c);
            }
            if alive {
                for (target, acc, wanted) in
                    [(0u8, &mut zero_sum, want_zero), (one, &mut one_sum, true)]
                {
                    if !wanted {
                        continue;
                    }
                    let last = field.sub(target, partial);
                    if let Some(t) = log[last as usize] {
                        acc[(e + js[nn - 1] * t) % m] += 1;
                    }
                }
            }
            if !advance(&mut cs, order as u8) {
                break;
            }
        }
        if !advance_indices(&mut js, m) {
            break;
        }
    }

    let phi = cyclotomic(m);
    let base = BigInt::from(q).pow(2 * n - 2);
    let zero = rational_value(&zero_sum, &phi).expect("zero-target character sum is not rational");
    let one_v = rational_value(&one_sum, &phi).expect("unit-target character sum is not rational");
    Ok(JacobiCheck {
        lhs_zero_sum: &base + zero,
        lhs_one_sum: base + one_v,
        rhs_zero: diagonal_count(q, n, true),
        rhs_one: diagonal_count(q, n, false),
    })
}

fn advance(digits: &mut [u8], radix: u8) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

fn advance_indices(js: &mut [usize], m: usize) -> bool {
    for j in js.iter_mut() {
        *j += 1;
        if *j < m {
            return true;
        }
        *j = 1;
    }
    false
}

#[cfg(test)]
/// `J_a(λ^{j₁}, …)` for explicit indices, as coefficients over ζ^0..ζ^q.
pub(crate) fn jacobi_sum(field: &Field, q: u64, js: &[usize], target: u8) -> Vec<i64> {
    let m = (q + 1) as usize;
    let mut acc = vec![0i64; m];
    let mut cs = vec![0u8; js.len()];
    loop {
        let mut s = 0u8;
        let mut e = 0usize;
        let mut alive = true;
        for (&c, &j) in cs.iter().zip(js) {
            s = field.add(s, c);
            match field.dlog(c) {
                Ok(t) => e += j * t as usize,
                Err(_) => alive = false,
            }
        }
        if alive && s == target {
            acc[e % m] += 1;
        }
        if !advance(&mut cs, field.order() as u8) {
            break;
        }
    }
    acc
}
