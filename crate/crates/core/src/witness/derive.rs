//! Re-derivation of the coefficient tables by the matrix method.
//!
//! Write `f_1 = f_49 Q` with `Q = F1 - q F2 - q^2 + q^5 F3` and split `Q^ell`
//! and `1/Q^ell` by `q`-residue mod 7. The residue parts of `1/Q^ell` solve
//! `A x = e_1` for the circulant matrix `A = A^(ell)`, so part `s` is
//! `CF_{1,c} / det A` for one first-row cofactor column `c`. With
//! `N = D^ell / f_1^ell`, `D = f_7^8 / f_49`, and `det A = (D / f_49^7)^ell`
//! this gives `N_s = f_49^{6 ell} CF_{1,c}`.
//!
//! Which `c` belongs to which `s` is not assumed: every column is reduced,
//! evaluated, and compared with the `7n + s` part of `N` computed directly
//! as a series, and exactly one column must match.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::tables::{outer_residue, schedule, Column, TableSet, WitnessTable};
use crate::error::{Error, Result};
use crate::qseries::EtaQuotient;
use crate::series::{Agreement, Series};
use crate::symbolic::{
    build_matrix_a_ell, build_matrix_w, cofactor_first_row, eval_poly_relabelled, matrix_power,
    reduce, LaurentPoly, Monomial, ReducedForm, ResidueForms,
};

/// Working order (in `q`) for the symbolic/series cross-check.
pub const WORKING_ORDER: usize = 400;

/// Exponents of `D` and `f_49` in a factor `D^d f_49^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prefactor {
    pub d: i64,
    pub f49: i64,
}

impl Prefactor {
    fn over(self, other: Prefactor) -> Prefactor {
        Prefactor {
            d: self.d - other.d,
            f49: self.f49 - other.f49,
        }
    }
}

/// Powers of `D` and `f_49` used to turn a cofactor into `N_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bookkeeping {
    /// `D^ell / f_49^ell`: the right side of the matrix equation.
    pub rhs: Prefactor,
    /// `det A^(ell) = (D / f_49^7)^ell`.
    pub determinant: Prefactor,
    /// `rhs / det`, the factor multiplying each cofactor.
    pub cofactor_factor: Prefactor,
}

impl Bookkeeping {
    pub fn new(ell: u32) -> Self {
        let ell = ell as i64;
        let rhs = Prefactor { d: ell, f49: -ell };
        let determinant = Prefactor {
            d: ell,
            f49: -7 * ell,
        };
        Bookkeeping {
            rhs,
            determinant,
            cofactor_factor: rhs.over(determinant),
        }
    }

    /// Exponent of `f_49` in `N_s = f_49^e CF`.
    pub fn f49_power(&self) -> i64 {
        self.cofactor_factor.f49
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ColumnTrial {
    pub column: usize,
    pub support: Vec<usize>,
    pub agreement: Agreement,
}

#[derive(Debug, Clone, Serialize)]
pub struct DerivationResult {
    pub ell: u32,
    pub residue_slot: usize,
    pub order: usize,
    /// 1-based first-row cofactor column whose reduced form matched.
    pub selected_column: usize,
    pub trials: Vec<ColumnTrial>,
    pub bookkeeping: Bookkeeping,
    #[serde(skip)]
    pub symbolic: ReducedForm,
    /// `sum_n [q^{7n + slot}] N(q) x^n`, with `x = q^7`.
    #[serde(skip)]
    pub series: Series,
}

impl DerivationResult {
    /// The reduced form multiplied out to `N_slot`, i.e. including the `f_49`
    /// power, as a display string.
    pub fn describe(&self) -> String {
        format!(
            "N_{} = f_49^{} * q^{} * ({})",
            self.residue_slot,
            self.bookkeeping.f49_power(),
            self.symbolic.residue,
            self.symbolic.poly
        )
    }
}

/// All first-row cofactors of `A^(ell)`, computed and reduced once.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub ell: u32,
    pub bookkeeping: Bookkeeping,
    cofactors: Vec<ResidueForms>,
}

impl Pipeline {
    pub fn new(ell: u32) -> Result<Self> {
        if ell == 0 {
            return Err(Error::IndexOutOfRange("power must be positive".into()));
        }
        let a = build_matrix_a_ell(ell);
        if matrix_power(&build_matrix_w(), ell)? != a {
            return Err(Error::SymbolicMismatch(format!(
                "W^{ell} differs from A^({ell})"
            )));
        }
        let bookkeeping = Bookkeeping::new(ell);
        if bookkeeping.cofactor_factor.d != 0 {
            return Err(Error::SymbolicMismatch("D does not cancel".into()));
        }
        let cofactors = (1..=7)
            .into_par_iter()
            .map(|col| cofactor_first_row(&a, col).map(|cf| reduce(&cf)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Pipeline {
            ell,
            bookkeeping,
            cofactors,
        })
    }

    /// Reduced first-row cofactor, `col` in `1..=7`.
    pub fn cofactor(&self, col: usize) -> Result<&ResidueForms> {
        self.cofactors
            .get(col.wrapping_sub(1))
            .ok_or_else(|| Error::IndexOutOfRange(format!("cofactor column {col}")))
    }

    /// `N = f_7^{8 ell} / (f_49^ell f_1^ell)` dissected at `slot`, in `x = q^7`.
    pub fn series_part(&self, slot: usize, order: usize) -> Result<Series> {
        let e = self.ell as i64;
        let n = EtaQuotient::new(vec![(7, 8 * e), (49, -e), (1, -e)]).eval(order)?;
        Ok(n.dissect(7, slot))
    }

    pub fn derive(&self, slot: usize, order: usize) -> Result<DerivationResult> {
        if slot > 6 {
            return Err(Error::IndexOutOfRange(format!(
                "residue slot {slot} not in 0..7"
            )));
        }
        let series = self.series_part(slot, order)?;
        let xorder = series.order();
        // f_49(q) = f_7(x)
        let f7 = EtaQuotient::new(vec![(7, self.bookkeeping.f49_power())]).eval(xorder)?;
        let trials = (1..=7)
            .into_par_iter()
            .map(|col| {
                let forms = &self.cofactors[col - 1];
                let part = forms.component(slot);
                let sym = f7.mul(&eval_poly_relabelled(&part.poly, xorder)?);
                Ok(ColumnTrial {
                    column: col,
                    support: forms.support(),
                    agreement: sym.eq_upto(&series, xorder)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let matches: Vec<usize> = trials
            .iter()
            .filter(|t| t.agreement.is_equal())
            .map(|t| t.column)
            .collect();
        if matches.len() != 1 {
            // report the first disagreement of the column with the closest match
            let worst = trials
                .iter()
                .filter_map(|t| match &t.agreement {
                    Agreement::Mismatch { index, left, right } => Some((*index, left, right)),
                    Agreement::Equal => None,
                })
                .max_by_key(|(i, _, _)| *i);
            return Err(match worst {
                Some((index, left, right)) if matches.is_empty() => Error::PipelineMismatch {
                    index,
                    symbolic: left.clone(),
                    series: right.clone(),
                },
                _ => Error::SymbolicMismatch(format!(
                    "{} cofactor columns match slot {slot}",
                    matches.len()
                )),
            });
        }
        let selected_column = matches[0];
        Ok(DerivationResult {
            ell: self.ell,
            residue_slot: slot,
            order,
            selected_column,
            trials,
            bookkeeping: self.bookkeeping,
            symbolic: self.cofactors[selected_column - 1].component(slot),
            series,
        })
    }
}

/// Build the pipeline for `ell` and derive one slot.
pub fn derive_component(ell: u32, slot: usize, order: usize) -> Result<DerivationResult> {
    Pipeline::new(ell)?.derive(slot, order)
}

/// Slot of `N` holding the progression `7n + s`: `s` for the `f_7^3/f_1^4`
/// part, `s - 1 (mod 7)` for `q f_7^7/f_1^8`.
pub fn progression_slot(ell: u32, s: usize) -> Result<usize> {
    match ell {
        4 if s < 7 => Ok(s),
        8 if s < 7 => Ok((s + 6) % 7),
        _ => Err(Error::IndexOutOfRange(format!(
            "no slot for power {ell}, residue {s}"
        ))),
    }
}

/// Split a reduced form into two schedule columns. Each monomial
/// `F1^a F2^b` must be the reduced image of exactly one scheduled entry;
/// coefficients are divided by `divisor`.
pub fn extract_columns(
    r: u32,
    columns: [Column; 2],
    poly: &LaurentPoly,
    divisor: &BigInt,
) -> Result<[Vec<BigInt>; 2]> {
    let mut out: [Vec<BigInt>; 2] = Default::default();
    let mut index = std::collections::HashMap::new();
    for (k, &c) in columns.iter().enumerate() {
        let (s, len) = schedule(r, c)?;
        out[k] = vec![BigInt::zero(); len];
        for j in 0..len {
            index.insert(s.reduced_exponents(j), (k, j));
        }
    }
    for (m, c) in poly.terms() {
        if m.f[2] != 0 || m.q != 0 {
            return Err(Error::SymbolicMismatch(format!(
                "reduced form has a term outside F1, F2: {}",
                LaurentPoly::term(c.clone(), *m)
            )));
        }
        let &(k, j) = index
            .get(&(m.f[0], m.f[1]))
            .ok_or(Error::ScheduleMismatch {
                f1: m.f[0],
                f2: m.f[1],
            })?;
        let (qt, rem) = c.div_rem(divisor);
        if !rem.is_zero() {
            return Err(Error::IndivisibleCoefficient {
                divisor: divisor.clone(),
                value: c.clone(),
            });
        }
        out[k][j] = qt;
    }
    Ok(out)
}

/// `(r, the two columns, their values)`.
pub type TableColumns = (u32, [Column; 2], [Vec<BigInt>; 2]);

/// Table columns from a derivation at progression residue `s`:
/// alpha/beta (divided by 7) for `ell = 4`, gamma/delta for `ell = 8`.
pub fn table_columns(result: &DerivationResult, s: usize) -> Result<Option<TableColumns>> {
    let Some(r) = outer_residue(s) else {
        return Ok(None);
    };
    let (columns, divisor) = match result.ell {
        4 => ([Column::Alpha, Column::Beta], BigInt::from(7)),
        8 => ([Column::Gamma, Column::Delta], BigInt::from(1)),
        ell => {
            return Err(Error::IndexOutOfRange(format!(
                "no table columns for power {ell}"
            )))
        }
    };
    let cols = extract_columns(r, columns, &result.symbolic.poly, &divisor)?;
    Ok(Some((r, columns, cols)))
}

/// Everything behind [`regenerate_tables`].
#[derive(Debug, Clone)]
pub struct Regeneration {
    pub tables: Vec<WitnessTable>,
    pub derivations: Vec<DerivationResult>,
}

/// Run both pipelines at the three progression residues and assemble the
/// tables, ordered by `r`.
pub fn regenerate_with_order(order: usize) -> Result<Regeneration> {
    let (p4, p8) = rayon::join(|| Pipeline::new(4), || Pipeline::new(8));
    let (p4, p8) = (p4?, p8?);
    let jobs: Vec<(usize, &Pipeline)> = [2usize, 4, 5]
        .iter()
        .flat_map(|&s| [(s, &p4), (s, &p8)])
        .collect();
    let results = jobs
        .par_iter()
        .map(|&(s, p)| {
            let d = p.derive(progression_slot(p.ell, s)?, order)?;
            let cols = table_columns(&d, s)?.expect("s is a table residue");
            Ok((d, cols))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut tables: Vec<WitnessTable> = [19, 33, 40]
        .map(|r| WitnessTable {
            r,
            alpha: vec![],
            beta: vec![],
            gamma: vec![],
            delta: vec![],
        })
        .to_vec();
    let mut derivations = Vec::new();
    for (d, (r, columns, values)) in results {
        let t = tables.iter_mut().find(|t| t.r == r).expect("known residue");
        for (c, v) in columns.into_iter().zip(values) {
            *t.column_mut(c) = v;
        }
        derivations.push(d);
    }
    for t in &tables {
        t.validate()?;
    }
    Ok(Regeneration {
        tables,
        derivations,
    })
}

/// The three tables as derived from scratch.
pub fn regenerate_tables() -> Result<Vec<WitnessTable>> {
    Ok(regenerate_with_order(WORKING_ORDER)?.tables)
}

/// Every entry where `tables` differs from `reference`, as
/// `(r, column, j, reference value, table value)`.
pub fn table_diff(
    reference: &[WitnessTable],
    tables: &[WitnessTable],
) -> Vec<(u32, Column, usize, BigInt, BigInt)> {
    let mut out = Vec::new();
    for t in tables {
        let Some(refr) = reference.iter().find(|x| x.r == t.r) else {
            continue;
        };
        for c in Column::ALL {
            let (a, b) = (refr.column(c), t.column(c));
            for j in 0..a.len().max(b.len()) {
                let x = a.get(j).cloned().unwrap_or_default();
                let y = b.get(j).cloned().unwrap_or_default();
                if x != y {
                    out.push((t.r, c, j, x, y));
                }
            }
        }
    }
    out
}

/// Convenience: does a regenerated set equal the loaded one exactly?
pub fn matches_tables(set: &TableSet, tables: &[WitnessTable]) -> bool {
    set.tables.as_slice() == tables
}

/// The published reduced form of `CF_{1,3}` for `ell = 4`, divided by
/// `7 q^2`: `(F1 exponent, F2 exponent, F3 exponent, coefficient)`.
pub const PUBLISHED_CF13: [(i32, i32, i32, i64); 20] = [
    (23, 0, 0, -532544),
    (22, 2, 0, 2822366),
    (21, 4, 0, -9375040),
    (20, 6, 0, 21207130),
    (19, 8, 0, -34041692),
    (18, 10, 0, 39647716),
    (17, 12, 0, -34010032),
    (16, 14, 0, 21762764),
    (15, 16, 0, -10688908),
    (14, 18, 0, 4393575),
    (13, 20, 0, -1624042),
    (12, 22, 0, 347825),
    (11, 24, 0, 133384),
    (10, 26, 0, -115269),
    (9, 28, 0, 17154),
    (8, 30, 0, 3047),
    (7, 32, 0, 36),
    (26, 0, 2, 54691),
    (29, 0, 4, -2174),
    (32, 0, 6, 15),
];

/// [`PUBLISHED_CF13`] as a polynomial, including the factor `7 q^2`.
pub fn published_cf13() -> LaurentPoly {
    LaurentPoly::from_terms(
        PUBLISHED_CF13
            .iter()
            .map(|&(a, b, c, v)| (Monomial::new(a, b, c, 2), BigInt::from(7 * v))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bookkeeping_exponents() {
        assert_eq!(Bookkeeping::new(4).f49_power(), 24);
        assert_eq!(Bookkeeping::new(8).f49_power(), 48);
        assert_eq!(Bookkeeping::new(4).cofactor_factor.d, 0);
    }

    #[test]
    fn slots() {
        assert_eq!(progression_slot(4, 2).unwrap(), 2);
        assert_eq!(progression_slot(8, 2).unwrap(), 1);
        assert_eq!(progression_slot(8, 0).unwrap(), 6);
        assert!(progression_slot(8, 7).is_err());
        assert!(progression_slot(5, 2).is_err());
    }

    #[test]
    fn extraction_rejects_stray_monomials() {
        let p = LaurentPoly::mono(14, 23, 0, 0, 0);
        let [a, b] =
            extract_columns(19, [Column::Alpha, Column::Beta], &p, &BigInt::from(7)).unwrap();
        assert_eq!(a[0], BigInt::from(2));
        assert!(b.iter().all(Zero::is_zero));
        let stray = LaurentPoly::mono(7, 1, 1, 0, 0);
        assert_eq!(
            extract_columns(19, [Column::Alpha, Column::Beta], &stray, &BigInt::from(7)),
            Err(Error::ScheduleMismatch { f1: 1, f2: 1 })
        );
        assert!(matches!(
            extract_columns(
                19,
                [Column::Alpha, Column::Beta],
                &LaurentPoly::mono(3, 23, 0, 0, 0),
                &BigInt::from(7)
            ),
            Err(Error::IndivisibleCoefficient { .. })
        ));
    }

    #[test]
    fn ell4_slot2_is_published_cf13() {
        let p = Pipeline::new(4).unwrap();
        let d = p.derive(2, 120).unwrap();
        assert_eq!(d.selected_column, 3);
        let published = reduce(&published_cf13()).component(2);
        assert_eq!(d.symbolic, published);
    }
}
