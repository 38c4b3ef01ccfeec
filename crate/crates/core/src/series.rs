//! Truncated formal power series in `q` with exact big-integer coefficients.
//!
//! A [`Series`] of order `n` stores the coefficients of `q^0 .. q^(n-1)`.
//! Binary operations truncate to the smaller order of their operands and
//! never pad: a result is only ever claimed up to where both inputs are known.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

/// Outcome of comparing two series on a prefix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Agreement {
    Equal,
    Mismatch {
        index: usize,
        #[serde(with = "crate::bigint_str")]
        left: BigInt,
        #[serde(with = "crate::bigint_str")]
        right: BigInt,
    },
}

impl Agreement {
    pub fn is_equal(&self) -> bool {
        matches!(self, Agreement::Equal)
    }
}

impl Series {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        Series { coeffs }
    }

    pub fn from_i64s(order: usize, values: &[i64]) -> Self {
        let mut coeffs = vec![BigInt::zero(); order];
        for (c, &v) in coeffs.iter_mut().zip(values) {
            *c = BigInt::from(v);
        }
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, BigInt::one())
    }

    /// `c * q^k`, truncated (zero if `k >= order`).
    pub fn monomial(order: usize, k: usize, c: BigInt) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`; zero beyond the order.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Series {
        let n = order.min(self.order());
        Series {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    fn nonzero_indices(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let coeffs = self.coeffs[..n]
            .iter()
            .zip(&other.coeffs[..n])
            .map(|(a, b)| a + b)
            .collect();
        Series { coeffs }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let coeffs = self.coeffs[..n]
            .iter()
            .zip(&other.coeffs[..n])
            .map(|(a, b)| a - b)
            .collect();
        Series { coeffs }
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Truncated Cauchy product. Zero coefficients on either side are skipped,
    /// which keeps products with sparse eta-type series cheap.
    pub fn mul(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); n];
        let (sparse, dense) = if self.nonzero_count(n) <= other.nonzero_count(n) {
            (self, other)
        } else {
            (other, self)
        };
        let dense_nz: Vec<usize> = dense
            .nonzero_indices()
            .into_iter()
            .filter(|&j| j < n)
            .collect();
        for i in sparse.nonzero_indices() {
            if i >= n {
                break;
            }
            let a = &sparse.coeffs[i];
            for &j in &dense_nz {
                if i + j >= n {
                    break;
                }
                out[i + j] += a * &dense.coeffs[j];
            }
        }
        Series { coeffs: out }
    }

    fn nonzero_count(&self, n: usize) -> usize {
        self.coeffs[..n.min(self.order())]
            .iter()
            .filter(|c| !c.is_zero())
            .count()
    }

    fn unit_sign(&self) -> Result<BigInt> {
        let c0 = self.coeff(0);
        if c0.abs().is_one() {
            Ok(c0)
        } else {
            Err(Error::NonUnitConstantTerm(c0))
        }
    }

    /// Exact quotient `self / divisor` for a divisor with constant term ±1,
    /// solved coefficient by coefficient.
    pub fn div(&self, divisor: &Series) -> Result<Series> {
        let u = divisor.unit_sign()?;
        let n = self.order().min(divisor.order());
        let terms: Vec<usize> = divisor
            .nonzero_indices()
            .into_iter()
            .filter(|&k| k >= 1 && k < n)
            .collect();
        let mut out: Vec<BigInt> = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = self.coeffs[i].clone();
            for &k in &terms {
                if k > i {
                    break;
                }
                acc -= &divisor.coeffs[k] * &out[i - k];
            }
            // u = ±1, so dividing by u is multiplying by u.
            out.push(acc * &u);
        }
        Ok(Series { coeffs: out })
    }

    /// Multiplicative inverse of a series with constant term ±1.
    pub fn inverse(&self) -> Result<Series> {
        Series::one(self.order()).div(self)
    }

    /// Exact power by repeated squaring; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Series> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Series::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Multiply by `q^k`, keeping the order (top `k` coefficients fall off).
    pub fn shift(&self, k: usize) -> Series {
        let n = self.order();
        let mut out = vec![BigInt::zero(); n];
        if k < n {
            out[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        Series { coeffs: out }
    }

    /// `sum_n a[m*n + r] q^n`, of order `ceil((order - r) / m)`.
    pub fn dissect(&self, m: usize, r: usize) -> Series {
        assert!(m >= 1, "dissection modulus must be positive");
        assert!(r < m, "residue {r} out of range for modulus {m}");
        let coeffs = self.coeffs.iter().skip(r).step_by(m).cloned().collect();
        Series { coeffs }
    }

    /// `q -> q^k`, keeping the order.
    pub fn substitute_power(&self, k: usize) -> Series {
        assert!(k >= 1, "substitution power must be positive");
        let n = self.order();
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            match i.checked_mul(k) {
                Some(idx) if idx < n => out[idx] = c.clone(),
                _ => break,
            }
        }
        Series { coeffs: out }
    }

    /// Compare the first `n` coefficients exactly.
    pub fn eq_upto(&self, other: &Series, n: usize) -> Result<Agreement> {
        let have = self.order().min(other.order());
        if have < n {
            return Err(Error::InsufficientOrder { needed: n, have });
        }
        for i in 0..n {
            if self.coeffs[i] != other.coeffs[i] {
                return Ok(Agreement::Mismatch {
                    index: i,
                    left: self.coeffs[i].clone(),
                    right: other.coeffs[i].clone(),
                });
            }
        }
        Ok(Agreement::Equal)
    }

    /// Reduce every coefficient into `0..m`.
    pub fn modulo(&self, m: &BigInt) -> Series {
        use num_integer::Integer;
        Series {
            coeffs: self.coeffs.iter().map(|c| c.mod_floor(m)).collect(),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}*q^{i}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::eta;

    fn s(order: usize, v: &[i64]) -> Series {
        Series::from_i64s(order, v)
    }

    #[test]
    fn add_cancels_and_has_identity() {
        assert_eq!(s(5, &[1, 1]).add(&s(5, &[1, -1])), s(5, &[2]));
        let a = s(6, &[3, -1, 4, 1, -5, 9]);
        assert_eq!(a.add(&Series::zero(6)), a);
        let f1 = eta(1, 50);
        assert!(f1.add(&f1.neg()).is_zero());
    }

    #[test]
    fn add_truncates_to_min_order() {
        let a = s(3, &[1, 2, 3]);
        let b = s(5, &[1, 1, 1, 1, 1]);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).order(), 3);
    }

    #[test]
    fn mul_small_examples() {
        assert_eq!(s(6, &[1, 1]).mul(&s(6, &[1, -1])), s(6, &[1, 0, -1]));
        let f1 = eta(1, 80);
        assert_eq!(f1.mul(&f1.inverse().unwrap()), Series::one(80));
    }

    #[test]
    fn eta_cubed_starts_with_jacobi_terms() {
        let c = eta(1, 11).pow(3).unwrap();
        assert_eq!(c, s(11, &[1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9]));
    }

    #[test]
    fn inverse_geometric_and_errors() {
        let inv = s(6, &[1, -1]).inverse().unwrap();
        assert_eq!(inv, s(6, &[1, 1, 1, 1, 1, 1]));
        // constant term -1 is a unit as well
        let inv = s(4, &[-1, 1]).inverse().unwrap();
        assert_eq!(inv, s(4, &[-1, -1, -1, -1]));
        assert_eq!(
            s(4, &[2, 1]).inverse(),
            Err(Error::NonUnitConstantTerm(BigInt::from(2)))
        );
        assert!(matches!(
            s(4, &[0, 1]).pow(-1),
            Err(Error::NonUnitConstantTerm(_))
        ));
    }

    #[test]
    fn inverse_of_eta_is_partition_numbers() {
        // p(0..=12) from the pentagonal recurrence
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        assert_eq!(eta(1, 13).inverse().unwrap(), s(13, &expected));
    }

    #[test]
    fn pow_basics() {
        let a = s(7, &[2, 5, -1]);
        assert_eq!(a.pow(0).unwrap(), Series::one(7));
        assert_eq!(s(5, &[1, 1]).pow(2).unwrap(), s(5, &[1, 2, 1]));
        let f1 = eta(1, 60);
        assert_eq!(f1.pow(3).unwrap(), f1.mul(&f1).mul(&f1));
        assert_eq!(f1.pow(-2).unwrap(), f1.mul(&f1).inverse().unwrap());
    }

    #[test]
    fn shift_and_substitute() {
        assert_eq!(Series::one(5).shift(2), s(5, &[0, 0, 1]));
        let a = s(5, &[1, 2, 3, 4, 5]);
        assert_eq!(a.shift(0), a);
        assert_eq!(a.shift(3), s(5, &[0, 0, 0, 1, 2]));
        assert_eq!(
            s(10, &[1, 1]).substitute_power(7),
            s(10, &[1, 0, 0, 0, 0, 0, 0, 1])
        );
        assert_eq!(a.substitute_power(1), a);
        assert_eq!(eta(1, 300).substitute_power(49), eta(49, 300));
    }

    #[test]
    fn dissect_examples() {
        let a = s(4, &[1, 2, 3, 4]);
        assert_eq!(a.dissect(2, 1), s(2, &[2, 4]));
        assert_eq!(a.dissect(3, 0).order(), 2);
        assert_eq!(a.dissect(3, 2).order(), 1);
        let cube = eta(1, 700).pow(3).unwrap();
        for r in [2, 4, 5] {
            assert!(cube.dissect(7, r).is_zero());
        }
        let p = eta(1, 49 * 40).inverse().unwrap();
        let seven_sq = BigInt::from(49);
        assert!(p.dissect(49, 19).modulo(&seven_sq).is_zero());
    }

    #[test]
    fn eq_upto_reports_first_mismatch() {
        let a = eta(1, 20);
        assert_eq!(a.eq_upto(&a, 20), Ok(Agreement::Equal));
        let n = 9;
        let one = Series::one(n);
        let other = one.add(&Series::monomial(n, n - 1, BigInt::one()));
        assert_eq!(
            one.eq_upto(&other, n),
            Ok(Agreement::Mismatch {
                index: n - 1,
                left: BigInt::zero(),
                right: BigInt::one()
            })
        );
        assert_eq!(
            one.eq_upto(&other, n + 1),
            Err(Error::InsufficientOrder {
                needed: n + 1,
                have: n
            })
        );
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(s(4, &[1, -1, 0, 2]).to_string(), "1 - q + 2*q^3 + O(q^4)");
        assert_eq!(Series::zero(3).to_string(), "0 + O(q^3)");
    }
}
