//! Coefficient-exact checks of the witness identities.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::tables::{inner_residue, schedule, Column, TableSet, WitnessTable};
use crate::error::Result;
use crate::partition::partition_series;
use crate::qseries::{eta, f7_blocks, EtaQuotient};
use crate::series::{Agreement, Series};
use crate::symbolic::{eval_with_blocks, LaurentPoly, Monomial};

/// The columns of `table` as a polynomial in `F1, F2, F3` (no reduction).
pub fn column_poly(table: &WitnessTable, columns: &[Column]) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero();
    for &c in columns {
        let (s, _) = schedule(table.r, c)?;
        for (j, v) in table.column(c).iter().enumerate() {
            let [a, b, d] = s.exponents(j);
            p.add_term(Monomial::new(a, b, d, 0), v);
        }
    }
    Ok(p)
}

/// `sum alpha F1^.. F2^.. + sum beta F1^.. F3^..` with `Fj = f_{j,7}(q)`.
pub fn alpha_beta_series(table: &WitnessTable, order: usize) -> Result<Series> {
    eval_with_blocks(
        &column_poly(table, &[Column::Alpha, Column::Beta])?,
        &f7_blocks(order),
    )
}

/// `sum gamma ... + sum delta ...` with `Fj = f_{j,7}(q)`.
pub fn gamma_delta_series(table: &WitnessTable, order: usize) -> Result<Series> {
    eval_with_blocks(
        &column_poly(table, &[Column::Gamma, Column::Delta])?,
        &f7_blocks(order),
    )
}

fn quotient(factors: &[(usize, i64)], order: usize) -> Result<Series> {
    EtaQuotient::new(factors.to_vec()).eval(order)
}

/// Right side of the witness identity for `p(49n + r)`:
/// `49 f_7^28/f_1^29 (alpha/beta part + f_7^28/f_1^28 (gamma/delta part))`.
pub fn rhs_series(table: &WitnessTable, order: usize) -> Result<Series> {
    let ab = alpha_beta_series(table, order)?;
    let gd = gamma_delta_series(table, order)?;
    let inner = ab.add(&quotient(&[(7, 28), (1, -28)], order)?.mul(&gd));
    Ok(quotient(&[(7, 28), (1, -29)], order)?
        .mul(&inner)
        .scale(&BigInt::from(49)))
}

/// `sum_n p(49n + r) q^n` to `order`.
pub fn theorem_lhs(r: u32, order: usize) -> Series {
    let r = r as usize;
    if order == 0 {
        return Series::zero(0);
    }
    partition_series(49 * (order - 1) + r + 1).dissect(49, r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub r: u32,
    pub order: usize,
    pub agreement: Agreement,
    #[serde(with = "crate::bigint_str")]
    pub constant_term: BigInt,
    pub passed: bool,
}

/// Compare `sum p(49n + r) q^n` with [`rhs_series`] on `q^0 .. q^{order-1}`.
pub fn verify_theorem(r: u32, tables: &TableSet, order: usize) -> Result<TheoremReport> {
    let table = tables.get(r)?;
    let order = order.max(1);
    let lhs = theorem_lhs(r, order);
    let rhs = rhs_series(table, order)?;
    let agreement = lhs.eq_upto(&rhs, order)?;
    Ok(TheoremReport {
        r,
        order,
        passed: agreement.is_equal(),
        constant_term: rhs.coeff(0),
        agreement,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness7n5Report {
    pub order: usize,
    pub agreement: Agreement,
    /// Right side mod 49 against `7 f_7^3/f_1^4` mod 49.
    pub mod49: Agreement,
    #[serde(with = "crate::bigint_str")]
    pub constant_term: BigInt,
    pub passed: bool,
}

/// `sum p(7n+5) q^n = 7 f_7^3/f_1^4 + 49 q f_7^7/f_1^8`.
pub fn verify_witness_7n5(order: usize) -> Result<Witness7n5Report> {
    let order = order.max(1);
    let lhs = partition_series(7 * order + 5)
        .dissect(7, 5)
        .truncate(order);
    let first = quotient(&[(7, 3), (1, -4)], order)?.scale(&BigInt::from(7));
    let second = quotient(&[(7, 7), (1, -8)], order)?
        .shift(1)
        .scale(&BigInt::from(49));
    let rhs = first.add(&second);
    let agreement = lhs.eq_upto(&rhs, order)?;
    let m = BigInt::from(49);
    let mod49 = rhs.modulo(&m).eq_upto(&first.modulo(&m), order)?;
    Ok(Witness7n5Report {
        order,
        passed: agreement.is_equal() && mod49.is_equal(),
        constant_term: rhs.coeff(0),
        agreement,
        mod49,
    })
}

/// `sum p_1(7n + s) q^n` and `sum p_2(7n + s - 1) q^n`, where
/// `sum p_1(n) q^n = f_7^3/f_1^4` and `sum p_2(n) q^n = f_7^7/f_1^8`.
pub fn progression_parts(s: usize, order: usize) -> Result<(Series, Series)> {
    let long = 7 * order + s;
    let p1 = quotient(&[(7, 3), (1, -4)], long)?
        .dissect(7, s)
        .truncate(order);
    let p2 = quotient(&[(7, 7), (1, -8)], long)?
        .shift(1)
        .dissect(7, s)
        .truncate(order);
    Ok((p1, p2))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssemblyReport {
    pub r: u32,
    pub order: usize,
    /// `p_1` part against `7 f_7^28/f_1^29` times the alpha/beta sum.
    pub first: Agreement,
    /// `p_2` part against `f_7^56/f_1^57` times the gamma/delta sum.
    pub second: Agreement,
    /// `7 (p_1 part) + 49 (p_2 part)` against [`rhs_series`].
    pub assembled: Agreement,
    pub passed: bool,
}

/// Checks each half of the witness identity separately against the
/// eta-quotient expansions of `f_7^3/f_1^4` and `q f_7^7/f_1^8`.
pub fn verify_assembly(r: u32, tables: &TableSet, order: usize) -> Result<AssemblyReport> {
    let table = tables.get(r)?;
    let order = order.max(1);
    let s = inner_residue(r)?;
    let (p1, p2) = progression_parts(s, order)?;
    let first_rhs = quotient(&[(7, 28), (1, -29)], order)?
        .mul(&alpha_beta_series(table, order)?)
        .scale(&BigInt::from(7));
    let second_rhs = quotient(&[(7, 56), (1, -57)], order)?.mul(&gamma_delta_series(table, order)?);
    let combined = p1.scale(&BigInt::from(7)).add(&p2.scale(&BigInt::from(49)));
    let first = p1.eq_upto(&first_rhs, order)?;
    let second = p2.eq_upto(&second_rhs, order)?;
    let assembled = combined.eq_upto(&rhs_series(table, order)?, order)?;
    Ok(AssemblyReport {
        r,
        order,
        passed: first.is_equal() && second.is_equal() && assembled.is_equal(),
        first,
        second,
        assembled,
    })
}

/// Residues `s` with a nonzero `q^{7n+s}` part of `f_1^3`.
pub fn cube_support(order: usize) -> Vec<usize> {
    let cube = eta(1, order).pow(3).expect("positive power");
    (0..7)
        .filter(|&s| cube.dissect(7, s).coeffs().iter().any(|c| !c.is_zero()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::tables::default_tables;

    #[test]
    fn constant_terms_are_p_of_r() {
        let set = default_tables();
        for (r, p) in [(19, 490), (33, 10143), (40, 37338)] {
            let rep = verify_theorem(r, &set, 1).unwrap();
            assert!(rep.passed, "r = {r}");
            assert_eq!(rep.constant_term, BigInt::from(p));
            assert_eq!(set.get(r).unwrap().total() * 49, BigInt::from(p));
        }
    }

    #[test]
    fn witness_7n5_small() {
        let rep = verify_witness_7n5(60).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.constant_term, BigInt::from(7));
    }

    #[test]
    fn theorem_short_order() {
        let set = default_tables();
        for r in [19, 33, 40] {
            assert!(verify_theorem(r, &set, 25).unwrap().passed, "r = {r}");
            assert!(verify_assembly(r, &set, 25).unwrap().passed, "r = {r}");
        }
    }

    #[test]
    fn cube_misses_two_four_five() {
        assert_eq!(cube_support(700), vec![0, 1, 3, 6]);
    }
}
