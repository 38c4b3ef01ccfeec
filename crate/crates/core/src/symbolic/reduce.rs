//! Normal form modulo the relations among `F1, F2, F3` (the `f_{j,7}(q^7)`)
//! and `q^7`:
//!
//! ```text
//! F1^2 - F1 F2^2 - q^7 F3       = 0
//! F1 - F2^2 - q^7 F2 F3^2       = 0
//! F2 - F1^2 F3 + q^7 F3^2       = 0
//! F1 F2 F3                      = 1
//! ```
//!
//! The last one gives `F3 -> F1^-1 F2^-1`; substituting that into the first
//! gives `q^7 -> F1^3 F2 - F1^2 F2^3`. After both rewrites a polynomial is a
//! sum over `r = 0..7` of `q^r` times a Laurent polynomial in `F1, F2` alone,
//! which is the normal form used for all symbolic comparisons.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::dissection::binomial;
use super::poly::{LaurentPoly, Monomial};

/// `q^residue * poly`, with `poly` free of `F3` and `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedForm {
    pub residue: usize,
    pub poly: LaurentPoly,
}

impl ReducedForm {
    /// Back to a [`LaurentPoly`]: `q^residue * poly`.
    pub fn embed(&self) -> LaurentPoly {
        self.poly
            .mul(&LaurentPoly::mono(1, 0, 0, 0, self.residue as u32))
    }
}

/// Normal forms of the seven `q`-residue classes of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ResidueForms {
    parts: [LaurentPoly; 7],
}

impl ResidueForms {
    pub fn component(&self, residue: usize) -> ReducedForm {
        ReducedForm {
            residue,
            poly: self.parts[residue].clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(LaurentPoly::is_zero)
    }

    /// Residues carrying a nonzero part.
    pub fn support(&self) -> Vec<usize> {
        (0..7).filter(|&r| !self.parts[r].is_zero()).collect()
    }

    pub fn embed(&self) -> LaurentPoly {
        (0..7).fold(LaurentPoly::zero(), |acc, r| {
            acc.add(&self.component(r).embed())
        })
    }
}

/// The four relations, each equal to zero, in the order listed above.
pub fn relations() -> [LaurentPoly; 4] {
    let f = LaurentPoly::mono;
    [
        f(1, 2, 0, 0, 0)
            .add(&f(-1, 1, 2, 0, 0))
            .add(&f(-1, 0, 0, 1, 7)),
        f(1, 1, 0, 0, 0)
            .add(&f(-1, 0, 2, 0, 0))
            .add(&f(-1, 0, 1, 2, 7)),
        f(1, 0, 1, 0, 0)
            .add(&f(-1, 2, 0, 1, 0))
            .add(&f(1, 0, 0, 2, 7)),
        f(1, 1, 1, 1, 0).add(&f(-1, 0, 0, 0, 0)),
    ]
}

pub fn reduce(p: &LaurentPoly) -> ResidueForms {
    let mut acc: [HashMap<Monomial, BigInt>; 7] = Default::default();
    let mut rows: HashMap<u32, Vec<BigInt>> = HashMap::new();
    for (m, c) in p.terms() {
        let a = m.f[0] - m.f[2];
        let b = m.f[1] - m.f[2];
        let (sevens, r) = (m.q / 7, (m.q % 7) as usize);
        // (F1^3 F2 - F1^2 F2^3)^s = sum_i binom(s,i) (-1)^i F1^{3s-i} F2^{s+2i}
        let row = rows
            .entry(sevens)
            .or_insert_with(|| (0..=sevens).map(|i| binomial(sevens, i)).collect());
        let s = sevens as i32;
        for (i, bc) in row.iter().enumerate() {
            let i = i as i32;
            let mono = Monomial::new(a + 3 * s - i, b + s + 2 * i, 0, 0);
            let term = c * bc;
            let slot = acc[r].entry(mono).or_default();
            if i % 2 == 0 {
                *slot += term;
            } else {
                *slot -= term;
            }
        }
    }
    ResidueForms {
        parts: acc.map(LaurentPoly::from_terms),
    }
}
