//! Series checks of the classical identities the witness derivation rests on.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::qseries::{eta, f7_blocks, jacobi_sum};
use crate::series::{Agreement, Series};
use crate::symbolic::{
    build_matrix_w, eval_poly, eval_with_blocks, quadrinomial, relations, LaurentPoly, Monomial,
};

/// `f_1^3 = sum (-1)^n (2n+1) q^{n(n+1)/2}`.
pub fn verify_jacobi(order: usize) -> Result<Agreement> {
    let cube = eta(1, order).pow(3)?;
    cube.eq_upto(&jacobi_sum(order), order)
}

/// `f_1 = f_49 (F1 - q F2 - q^2 + q^5 F3)` with `Fj = f_{j,7}(q^7)`.
pub fn verify_dissection7(order: usize) -> Result<Agreement> {
    let rhs = eta(49, order).mul(&eval_poly(&quadrinomial(), order)?);
    eta(1, order).eq_upto(&rhs, order)
}

/// `q^7 -> q`, for polynomials whose `q`-exponents are all multiples of 7.
fn relabel(p: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().map(|(m, c)| {
        debug_assert_eq!(m.q % 7, 0);
        (Monomial::new(m.f[0], m.f[1], m.f[2], m.q / 7), c.clone())
    }))
}

/// Each relation among the `f_{j,7}`, evaluated at argument `q` to `order`,
/// against zero.
pub fn verify_relations(order: usize) -> Result<[Agreement; 4]> {
    let blocks = f7_blocks(order);
    let zero = Series::zero(order);
    let [a, b, c, d] =
        relations().map(|rel| eval_with_blocks(&relabel(&rel), &blocks)?.eq_upto(&zero, order));
    Ok([a?, b?, c?, d?])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetWReport {
    /// `Det(W)`, as computed from the matrix, in display form.
    pub determinant: String,
    /// `Det(W) f_49^8` against `f_7^8`.
    pub agreement: Agreement,
}

/// `Det(W) f_49^8 = f_7^8`, with `Det(W)` expanded symbolically.
pub fn verify_det_w(order: usize) -> Result<DetWReport> {
    let det = build_matrix_w().determinant();
    let lhs = eval_poly(&det, order)?.mul(&eta(49, order).pow(8)?);
    let agreement = lhs.eq_upto(&eta(7, order).pow(8)?, order)?;
    Ok(DetWReport {
        determinant: det.to_string(),
        agreement,
    })
}

/// Published expansion of `Det(W)`: `(coefficient, F1, F2, F3, q)` exponents.
pub const DET_W_TERMS: [(i64, i32, i32, i32, u32); 18] = [
    (1, 7, 0, 0, 0),
    (-1, 0, 7, 0, 7),
    (-7, 1, 5, 0, 7),
    (-14, 2, 3, 0, 7),
    (7, 4, 2, 1, 7),
    (-7, 3, 1, 0, 7),
    (7, 5, 0, 1, 7),
    (7, 1, 4, 2, 14),
    (7, 2, 2, 2, 14),
    (-14, 1, 1, 1, 14),
    (14, 3, 0, 2, 14),
    (-7, 0, 3, 1, 14),
    (-1, 0, 0, 0, 14),
    (-7, 2, 1, 4, 21),
    (14, 0, 2, 3, 21),
    (7, 1, 0, 3, 21),
    (-7, 0, 1, 5, 28),
    (1, 0, 0, 7, 35),
];

/// [`DET_W_TERMS`] as a polynomial.
pub fn det_w_published() -> LaurentPoly {
    LaurentPoly::from_terms(
        DET_W_TERMS
            .iter()
            .map(|&(c, a, b, d, e)| (Monomial::new(a, b, d, e), BigInt::from(c))),
    )
}
