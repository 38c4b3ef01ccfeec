use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Dense square matrix of Laurent polynomials, row-major, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zero(n: usize) -> Self {
        PolyMatrix {
            n,
            entries: vec![LaurentPoly::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { n, entries }
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self::from_fn(n, |i, j| LaurentPoly::constant(BigInt::from(rows[i][j])))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let entries: Vec<LaurentPoly> = (0..n * n)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                let mut acc = LaurentPoly::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                acc
            })
            .collect();
        Ok(PolyMatrix { n, entries })
    }

    /// Matrix with row `row` and column `col` removed.
    pub fn minor(&self, row: usize, col: usize) -> PolyMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != row) {
            for j in (0..n).filter(|&j| j != col) {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { n: n - 1, entries }
    }

    /// Determinant by Laplace expansion along successive rows, memoised on the
    /// set of columns still available. General purpose; the witness pipeline
    /// uses [`det5`] and [`cofactor_first_row`] instead.
    pub fn determinant(&self) -> LaurentPoly {
        let mut memo: HashMap<u64, LaurentPoly> = HashMap::new();
        let all = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        self.det_rows(0, all, &mut memo)
    }

    fn det_rows(&self, row: usize, cols: u64, memo: &mut HashMap<u64, LaurentPoly>) -> LaurentPoly {
        if row == self.n {
            return LaurentPoly::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = LaurentPoly::zero();
        let mut position = 0usize;
        for j in 0..self.n {
            if cols & (1 << j) == 0 {
                continue;
            }
            let e = self.get(row, j);
            if !e.is_zero() {
                let sub = self.det_rows(row + 1, cols & !(1 << j), memo);
                let term = e.mul(&sub);
                acc = if position.is_multiple_of(2) {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            position += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `v^e` for `e >= 1` by repeated multiplication.
pub fn matrix_power(v: &PolyMatrix, e: u32) -> Result<PolyMatrix> {
    if e == 0 {
        return Err(Error::IndexOutOfRange(
            "matrix power exponent must be at least 1".into(),
        ));
    }
    let mut acc = v.clone();
    for _ in 1..e {
        acc = acc.mul(v)?;
    }
    Ok(acc)
}

/// Determinant of a 5x5 matrix through the ten 3x3 minors of rows 3..5
/// (`𝒜` .. `𝒥` below), combined by expansion along rows 1 and 2.
pub fn det5(mat: &PolyMatrix) -> Result<LaurentPoly> {
    if mat.dim() != 5 {
        return Err(Error::DimensionMismatch {
            expected: 5,
            found: mat.dim(),
        });
    }
    let m = |i: usize, j: usize| mat.get(i - 1, j - 1);

    // 2x2 minors of rows 4, 5 on columns (a, b).
    let mut pair: HashMap<(usize, usize), LaurentPoly> = HashMap::new();
    for a in 1..=5 {
        for b in a + 1..=5 {
            pair.insert((a, b), m(4, a).mul(m(5, b)).sub(&m(5, a).mul(m(4, b))));
        }
    }
    // Minor of rows 3..5 on columns a < b < c.
    let tri = |a: usize, b: usize, c: usize| -> LaurentPoly {
        m(3, a)
            .mul(&pair[&(b, c)])
            .sub(&m(3, b).mul(&pair[&(a, c)]))
            .add(&m(3, c).mul(&pair[&(a, b)]))
    };
    let ca = tri(3, 4, 5);
    let cb = tri(2, 4, 5);
    let cc = tri(2, 3, 5);
    let cd = tri(2, 3, 4);
    let ce = tri(1, 4, 5);
    let cf = tri(1, 3, 5);
    let cg = tri(1, 3, 4);
    let ch = tri(1, 2, 5);
    let ci = tri(1, 2, 4);
    let cj = tri(1, 2, 3);

    // sum of s_k * m(2, c_k) * minor_k with alternating signs
    let alt = |terms: [(&LaurentPoly, &LaurentPoly); 4]| -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for (k, (a, b)) in terms.into_iter().enumerate() {
            let t = a.mul(b);
            acc = if k % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
        }
        acc
    };

    let r1 = alt([
        (m(2, 2), &ca),
        (m(2, 3), &cb),
        (m(2, 4), &cc),
        (m(2, 5), &cd),
    ]);
    let r2 = alt([
        (m(2, 1), &ca),
        (m(2, 3), &ce),
        (m(2, 4), &cf),
        (m(2, 5), &cg),
    ]);
    let r3 = alt([
        (m(2, 1), &cb),
        (m(2, 2), &ce),
        (m(2, 4), &ch),
        (m(2, 5), &ci),
    ]);
    let r4 = alt([
        (m(2, 1), &cc),
        (m(2, 2), &cf),
        (m(2, 3), &ch),
        (m(2, 5), &cj),
    ]);
    let r5 = alt([
        (m(2, 1), &cd),
        (m(2, 2), &cg),
        (m(2, 3), &ci),
        (m(2, 4), &cj),
    ]);

    Ok(m(1, 1)
        .mul(&r1)
        .sub(&m(1, 2).mul(&r2))
        .add(&m(1, 3).mul(&r3))
        .sub(&m(1, 4).mul(&r4))
        .add(&m(1, 5).mul(&r5)))
}

/// Cofactor `CF_{1,col}` (1-based `col`) of a 7x7 matrix: the 6x6 minor is
/// expanded along its first row, each 5x5 minor going through [`det5`].
pub fn cofactor_first_row(a: &PolyMatrix, col: usize) -> Result<LaurentPoly> {
    if a.dim() != 7 {
        return Err(Error::DimensionMismatch {
            expected: 7,
            found: a.dim(),
        });
    }
    if !(1..=7).contains(&col) {
        return Err(Error::IndexOutOfRange(format!(
            "cofactor column {col} not in 1..=7"
        )));
    }
    let sub = a.minor(0, col - 1);
    let minors: Vec<LaurentPoly> = (0..6)
        .into_par_iter()
        .map(|j| det5(&sub.minor(0, j)))
        .collect::<Result<_>>()?;
    let mut det6 = LaurentPoly::zero();
    for (j, u) in minors.iter().enumerate() {
        let t = sub.get(0, j).mul(u);
        det6 = if j % 2 == 0 {
            det6.add(&t)
        } else {
            det6.sub(&t)
        };
    }
    Ok(if (1 + col).is_multiple_of(2) {
        det6
    } else {
        det6.neg()
    })
}
