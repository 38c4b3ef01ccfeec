//! Partition numbers, two-color partition numbers and congruence checks
//! along arithmetic progressions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qseries::eta;
use crate::series::{Agreement, Series};

/// `p(0), ..., p(n)` by Euler's pentagonal recurrence
/// `p(n) = sum_{k >= 1} (-1)^{k+1} (p(n - k(3k-1)/2) + p(n - k(3k+1)/2))`.
pub fn partition_numbers(n: usize) -> Vec<BigInt> {
    let mut p: Vec<BigInt> = Vec::with_capacity(n + 1);
    p.push(BigInt::one());
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1usize.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            if k % 2 == 1 {
                acc += &p[m - g1];
                if g2 <= m {
                    acc += &p[m - g2];
                }
            } else {
                acc -= &p[m - g1];
                if g2 <= m {
                    acc -= &p[m - g2];
                }
            }
        }
        p.push(acc);
    }
    p
}

/// `sum p(n) q^n = 1 / f_1` to the given order, via series division.
pub fn partition_series(order: usize) -> Series {
    eta(1, order).inverse().expect("f_1 has constant term 1")
}

/// `p_{1,r}(0..=n)`: partitions in which parts divisible by `r` come in two
/// colors. Generating function `1 / (f_1 f_r)`.
pub fn two_color_numbers(r: usize, n: usize) -> Vec<BigInt> {
    assert!(r >= 1, "color step must be positive");
    let order = n + 1;
    partition_series(order)
        .div(&eta(r, order))
        .expect("f_r has constant term 1")
        .into_coeffs()
}

/// "`value(step * n + residue) = 0 (mod modulus)` for `0 <= n < count`".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceClaim {
    pub modulus: u64,
    pub step: usize,
    pub residue: usize,
    pub count: usize,
}

impl CongruenceClaim {
    pub fn new(modulus: u64, step: usize, residue: usize, count: usize) -> Result<Self> {
        if modulus == 0 || step == 0 {
            return Err(Error::IndexOutOfRange(
                "congruence modulus and step must be positive".into(),
            ));
        }
        if residue >= step {
            return Err(Error::IndexOutOfRange(format!(
                "residue {residue} must be below step {step}"
            )));
        }
        Ok(CongruenceClaim {
            modulus,
            step,
            residue,
            count,
        })
    }

    /// Largest index the claim reads, or `None` when `count == 0`.
    pub fn max_index(&self) -> Option<usize> {
        self.count
            .checked_sub(1)
            .map(|k| self.step * k + self.residue)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceEntry {
    pub n: usize,
    #[serde(with = "crate::bigint_str")]
    pub value: BigInt,
    #[serde(with = "crate::bigint_str")]
    pub quotient: BigInt,
    #[serde(with = "crate::bigint_str")]
    pub remainder: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub claim: CongruenceClaim,
    pub passed: bool,
    /// First `n` whose value is not divisible by the modulus.
    pub first_failure: Option<usize>,
    pub entries: Vec<CongruenceEntry>,
}

pub fn check_congruence(values: &[BigInt], claim: &CongruenceClaim) -> Result<CongruenceReport> {
    if let Some(needed) = claim.max_index() {
        if needed >= values.len() {
            return Err(Error::InsufficientData {
                needed,
                have: values.len(),
            });
        }
    }
    let m = BigInt::from(claim.modulus);
    let entries: Vec<CongruenceEntry> = (0..claim.count)
        .map(|n| {
            let value = values[claim.step * n + claim.residue].clone();
            let (quotient, remainder) = value.div_mod_floor(&m);
            CongruenceEntry {
                n,
                value,
                quotient,
                remainder,
            }
        })
        .collect();
    let first_failure = entries.iter().find(|e| !e.remainder.is_zero()).map(|e| e.n);
    Ok(CongruenceReport {
        claim: claim.clone(),
        passed: first_failure.is_none(),
        first_failure,
        entries,
    })
}

/// `(color step r, modulus, progression step, residues)` for the two-color
/// congruences `p_{1,r}(step n + t) = 0 (mod modulus)`.
pub const TWO_COLOR_FAMILIES: [(usize, u64, usize, &[usize]); 4] = [
    (7, 5, 25, &[17]),
    (17, 5, 25, &[7]),
    (2, 7, 49, &[15, 29, 36, 43]),
    (4, 7, 49, &[11, 25, 32, 39]),
];

/// Residues `r` with `p(49n + r) = 0 (mod 49)`.
pub const MOD49_RESIDUES: [usize; 3] = [19, 33, 40];

/// `p(49n + r)` mod 49 for `0 <= n < count`, one report per residue.
pub fn sweep_p_mod49(residues: &[usize], count: usize) -> Result<Vec<CongruenceReport>> {
    let claims = residues
        .iter()
        .map(|&r| CongruenceClaim::new(49, 49, r, count))
        .collect::<Result<Vec<_>>>()?;
    let top = claims
        .iter()
        .filter_map(CongruenceClaim::max_index)
        .max()
        .unwrap_or(0);
    let p = partition_numbers(top);
    claims.iter().map(|c| check_congruence(&p, c)).collect()
}

/// Every two-color congruence for `0 <= n < count`, tagged with its color step.
pub fn sweep_two_color(count: usize) -> Result<Vec<(usize, CongruenceReport)>> {
    let mut out = Vec::new();
    for &(r, modulus, step, residues) in &TWO_COLOR_FAMILIES {
        let claims = residues
            .iter()
            .map(|&t| CongruenceClaim::new(modulus, step, t, count))
            .collect::<Result<Vec<_>>>()?;
        let top = claims
            .iter()
            .filter_map(CongruenceClaim::max_index)
            .max()
            .unwrap_or(0);
        let values = two_color_numbers(r, top);
        for c in &claims {
            out.push((r, check_congruence(&values, c)?));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step1Report {
    pub order: usize,
    /// `sum p(7n+5) q^n` against `7 f_1^3 f_7^2`, both reduced mod 49.
    pub mod49: Agreement,
    /// Residues `s` in {2, 4, 5} and whether the `7n + s` part of the
    /// right side vanishes mod 49.
    pub vanishing: Vec<(usize, bool)>,
    pub passed: bool,
}

/// Checks `sum p(7n+5) q^n = 7 f_1^3 f_7^2 (mod 49)` and that the right side has
/// no `q^{7n+2}`, `q^{7n+4}`, `q^{7n+5}` terms mod 49.
pub fn verify_step1_mod49(order: usize) -> Step1Report {
    let order = order.max(1);
    let m49 = BigInt::from(49);
    let lhs = partition_series(7 * order + 5)
        .dissect(7, 5)
        .truncate(order);
    let rhs = eta(1, order)
        .pow(3)
        .unwrap()
        .mul(&eta(7, order).pow(2).unwrap())
        .scale(&BigInt::from(7));
    let mod49 = lhs
        .modulo(&m49)
        .eq_upto(&rhs.modulo(&m49), order)
        .expect("both operands have the requested order");
    let vanishing: Vec<(usize, bool)> = [2usize, 4, 5]
        .into_iter()
        .map(|s| (s, rhs.dissect(7, s).modulo(&m49).is_zero()))
        .collect();
    let passed = mod49.is_equal() && vanishing.iter().all(|&(_, ok)| ok);
    Step1Report {
        order,
        mod49,
        vanishing,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force count of colored partitions: parts divisible by `r` carry one
    /// of two colors. Enumerates multisets of (part, color) with non-increasing
    /// keys.
    fn brute_two_color(r: usize, n: usize) -> u64 {
        let mut kinds: Vec<(usize, u8)> = Vec::new();
        for part in 1..=n {
            kinds.push((part, 0));
            if part % r == 0 {
                kinds.push((part, 1));
            }
        }
        fn count(kinds: &[(usize, u8)], start: usize, left: usize) -> u64 {
            if left == 0 {
                return 1;
            }
            (start..kinds.len())
                .filter(|&i| kinds[i].0 <= left)
                .map(|i| count(kinds, i, left - kinds[i].0))
                .sum()
        }
        count(&kinds, 0, n)
    }

    #[test]
    fn small_partition_values() {
        let p = partition_numbers(40);
        assert_eq!(p[0], BigInt::from(1));
        assert_eq!(p[4], BigInt::from(5));
        assert_eq!(p[18], BigInt::from(385));
        assert_eq!(p[19], BigInt::from(490));
        assert_eq!(p[33], BigInt::from(10143));
        assert_eq!(p[40], BigInt::from(37338));
    }

    #[test]
    fn recurrence_matches_series_inverse() {
        let n = 1500;
        assert_eq!(partition_numbers(n), partition_series(n + 1).into_coeffs());
    }

    #[test]
    fn two_color_against_brute_force() {
        for r in 1..=5 {
            let v = two_color_numbers(r, 10);
            for (n, value) in v.iter().enumerate() {
                assert_eq!(
                    *value,
                    BigInt::from(brute_two_color(r, n)),
                    "r = {r}, n = {n}"
                );
            }
        }
        assert_eq!(two_color_numbers(2, 2)[2], BigInt::from(3));
        assert_eq!(two_color_numbers(7, 0)[0], BigInt::from(1));
    }

    #[test]
    fn two_color_matches_inverse_of_product() {
        let order = 200;
        let direct = eta(1, order).mul(&eta(4, order)).inverse().unwrap();
        assert_eq!(two_color_numbers(4, order - 1), direct.into_coeffs());
    }

    #[test]
    fn two_color_spot_congruence() {
        let v = two_color_numbers(7, 17);
        assert!((&v[17] % BigInt::from(5)).is_zero());
    }

    #[test]
    fn congruence_pass_and_fail() {
        let p = partition_numbers(49 * 50 + 19);
        let claim = CongruenceClaim::new(49, 49, 19, 50).unwrap();
        let rep = check_congruence(&p, &claim).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.entries[0].quotient, BigInt::from(10));

        let claim = CongruenceClaim::new(49, 49, 18, 5).unwrap();
        let rep = check_congruence(&p, &claim).unwrap();
        assert!(!rep.passed);
        assert_eq!(rep.first_failure, Some(0));
        assert_eq!(rep.entries[0].value, BigInt::from(385));

        let zeros = vec![BigInt::zero(); 100];
        let claim = CongruenceClaim::new(13, 7, 3, 12).unwrap();
        assert!(check_congruence(&zeros, &claim).unwrap().passed);
    }

    #[test]
    fn congruence_errors() {
        assert!(CongruenceClaim::new(49, 49, 49, 1).is_err());
        assert!(CongruenceClaim::new(0, 49, 1, 1).is_err());
        let claim = CongruenceClaim::new(49, 49, 19, 3).unwrap();
        let short = partition_numbers(100);
        assert_eq!(
            check_congruence(&short, &claim),
            Err(Error::InsufficientData {
                needed: 117,
                have: 101
            })
        );
        let empty = CongruenceClaim::new(49, 49, 19, 0).unwrap();
        assert!(check_congruence(&[], &empty).unwrap().passed);
    }

    #[test]
    fn step1_mod49() {
        assert!(verify_step1_mod49(200).passed);
        assert!(verify_step1_mod49(1).passed);
        let exact = eta(1, 300)
            .pow(3)
            .unwrap()
            .mul(&eta(7, 300).pow(2).unwrap());
        assert!(exact.dissect(7, 2).is_zero());
    }
}
