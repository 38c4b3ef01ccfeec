//! Concrete q-products: `f_n = (q^n; q^n)_inf`, Pochhammer products
//! `(q^a; q^b)_inf`, and the quotients `f_{j,k}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::Series;

/// Multiply `coeffs` in place by `(1 - q^m)`.
fn mul_one_minus(coeffs: &mut [BigInt], m: usize) {
    for i in (m..coeffs.len()).rev() {
        let (lo, hi) = coeffs.split_at_mut(i);
        hi[0] -= &lo[i - m];
    }
}

/// `f_n` expanded via Euler's pentagonal number theorem:
/// `prod (1 - q^j) = sum_k (-1)^k q^{k(3k-1)/2}` over all integers `k`,
/// then `q -> q^n`.
pub fn eta(n: usize, order: usize) -> Series {
    assert!(n >= 1, "eta step must be positive");
    let mut coeffs = vec![BigInt::zero(); order];
    if order == 0 {
        return Series::from_coeffs(coeffs);
    }
    coeffs[0] = BigInt::one();
    for k in 1usize.. {
        let sign = if k % 2 == 1 { -1 } else { 1 };
        let p1 = k * (3 * k - 1) / 2 * n;
        let p2 = k * (3 * k + 1) / 2 * n;
        if p1 >= order {
            break;
        }
        coeffs[p1] = BigInt::from(sign);
        if p2 < order {
            coeffs[p2] = BigInt::from(sign);
        }
    }
    Series::from_coeffs(coeffs)
}

/// `f_n` as the finite product `prod_{j >= 1, n j < order} (1 - q^{n j})`.
pub fn eta_product(n: usize, order: usize) -> Series {
    pochhammer(n, n, order)
}

/// `(q^a; q^b)_inf = prod_{j >= 0} (1 - q^{a + j b})`, truncated.
pub fn pochhammer(a: usize, b: usize, order: usize) -> Series {
    assert!(a >= 1 && b >= 1, "Pochhammer arguments must be positive");
    let mut coeffs = vec![BigInt::zero(); order];
    if order == 0 {
        return Series::from_coeffs(coeffs);
    }
    coeffs[0] = BigInt::one();
    let mut m = a;
    while m < order {
        mul_one_minus(&mut coeffs, m);
        m += b;
    }
    Series::from_coeffs(coeffs)
}

/// `f_{j,k}(q) = (q^{2j};q^k)(q^{k-2j};q^k) / ((q^j;q^k)(q^{k-j};q^k))`.
pub fn f_jk(j: u32, k: u32, order: usize) -> Result<Series> {
    if j == 0 || 2 * j >= k {
        return Err(Error::InvalidDissectionIndex { j, k });
    }
    let (j, k) = (j as usize, k as usize);
    let num = pochhammer(2 * j, k, order).mul(&pochhammer(k - 2 * j, k, order));
    let den = pochhammer(j, k, order).mul(&pochhammer(k - j, k, order));
    num.div(&den)
}

/// The sparse right side of Jacobi's identity,
/// `sum_{n >= 0} (-1)^n (2n + 1) q^{n(n+1)/2}`.
pub fn jacobi_sum(order: usize) -> Series {
    let mut coeffs = vec![BigInt::zero(); order];
    for n in 0usize.. {
        let e = n * (n + 1) / 2;
        if e >= order {
            break;
        }
        let v = BigInt::from(2 * n + 1);
        coeffs[e] = if n % 2 == 0 { v } else { -v };
    }
    Series::from_coeffs(coeffs)
}

/// A product of powers of `f_n`: each `(n, e)` contributes `f_n^e`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaQuotient {
    pub factors: Vec<(usize, i64)>,
}

impl EtaQuotient {
    pub fn new(factors: Vec<(usize, i64)>) -> Self {
        assert!(
            factors.iter().all(|&(n, _)| n >= 1),
            "eta quotient steps must be positive"
        );
        EtaQuotient { factors }
    }

    pub fn eval(&self, order: usize) -> Result<Series> {
        eval_eta_quotient(self, order)
    }
}

pub fn eval_eta_quotient(spec: &EtaQuotient, order: usize) -> Result<Series> {
    let mut num = Series::one(order);
    let mut den = Series::one(order);
    for &(n, e) in &spec.factors {
        let base = eta(n, order);
        if e >= 0 {
            num = num.mul(&base.pow(e)?);
        } else {
            den = den.mul(&base.pow(-e)?);
        }
    }
    num.div(&den)
}

/// `a(q^k)` to `order`, reading only the first `ceil(order / k)` coefficients of `a`.
///
/// Unlike [`Series::substitute_power`] the result order is chosen freely, so a
/// short series in `q^7` can be lifted to a long series in `q`.
pub fn lift(a: &Series, k: usize, order: usize) -> Series {
    assert!(k >= 1);
    let mut out = vec![BigInt::zero(); order];
    for (i, c) in a.coeffs().iter().enumerate() {
        let idx = i * k;
        if idx >= order {
            break;
        }
        out[idx] = c.clone();
    }
    Series::from_coeffs(out)
}

/// `[f_{1,7}(q), f_{2,7}(q), f_{3,7}(q)]` to the given order.
pub fn f7_blocks(order: usize) -> [Series; 3] {
    [1, 2, 3].map(|j| f_jk(j, 7, order).expect("valid index"))
}

/// `[f_{1,7}(q^7), f_{2,7}(q^7), f_{3,7}(q^7)]` to the given order in `q`.
pub fn f7_blocks_at_q7(order: usize) -> [Series; 3] {
    let inner = order.div_ceil(7).max(1);
    f7_blocks(inner).map(|s| lift(&s, 7, order))
}
