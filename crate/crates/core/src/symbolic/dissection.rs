//! The symbolic side of the 7-dissection
//! `f_1 = f_49 (F1 - q F2 - q^2 + q^5 F3)` with `Fj = f_{j,7}(q^7)`:
//! multinomial terms of its powers, their grouping by `q`-residue mod 7, and
//! the circulant-layout matrices `W` and `A`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::PolyMatrix;
use super::poly::{LaurentPoly, Monomial};
use crate::error::{Error, Result};

/// `binom(n, k)` exactly; zero outside `0 <= k <= n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `F1 - q F2 - q^2 + q^5 F3`.
pub fn quadrinomial() -> LaurentPoly {
    LaurentPoly::f1()
        .sub(&LaurentPoly::mono(1, 0, 1, 0, 1))
        .sub(&LaurentPoly::mono(1, 0, 0, 0, 2))
        .add(&LaurentPoly::mono(1, 0, 0, 1, 5))
}

/// The `(i, j, k)` term of the multinomial expansion of the quadrinomial to
/// the power `ell`:
/// `binom(ell,i) binom(ell-i,j) binom(i,k) (-1)^{i+j-k} F1^{ell-i-j} F2^j F3^k q^{2i+j+3k}`.
pub fn multinomial_term(ell: u32, i: u32, j: u32, k: u32) -> Result<LaurentPoly> {
    if i > ell || j > ell - i || k > i {
        return Err(Error::IndexOutOfRange(format!(
            "multinomial index (i, j, k) = ({i}, {j}, {k}) invalid for power {ell}"
        )));
    }
    let mut c = binomial(ell, i) * binomial(ell - i, j) * binomial(i, k);
    if (i + j - k) % 2 == 1 {
        c = -c;
    }
    Ok(LaurentPoly::term(
        c,
        Monomial::new((ell - i - j) as i32, j as i32, k as i32, 2 * i + j + 3 * k),
    ))
}

/// `R_{i,j,k}`: the fourth-power term.
pub fn build_r(i: u32, j: u32, k: u32) -> Result<LaurentPoly> {
    multinomial_term(4, i, j, k)
}

/// All `(i, j, k)` with the `q`-exponent `2i + j + 3k`, in the order they are
/// tabulated for the fourth power.
pub const FOURTH_POWER_TUPLES: [(u32, u32, u32, u32); 35] = [
    (0, 0, 0, 0),
    (0, 1, 0, 1),
    (0, 2, 0, 2),
    (0, 3, 0, 3),
    (0, 4, 0, 4),
    (1, 3, 0, 5),
    (1, 1, 1, 6),
    (1, 2, 1, 7),
    (1, 3, 1, 8),
    (1, 0, 0, 2),
    (1, 1, 0, 3),
    (1, 2, 0, 4),
    (1, 0, 1, 5),
    (2, 2, 0, 6),
    (2, 0, 1, 7),
    (2, 1, 1, 8),
    (2, 2, 1, 9),
    (2, 0, 2, 10),
    (2, 0, 0, 4),
    (2, 1, 0, 5),
    (3, 0, 0, 6),
    (3, 1, 0, 7),
    (4, 0, 0, 8),
    (3, 0, 1, 9),
    (3, 1, 1, 10),
    (2, 1, 2, 11),
    (2, 2, 2, 12),
    (3, 1, 2, 13),
    (4, 0, 2, 14),
    (3, 0, 3, 15),
    (3, 1, 3, 16),
    (4, 0, 3, 17),
    (4, 0, 1, 11),
    (3, 0, 2, 12),
    (4, 0, 4, 20),
];

/// The five `R_{i,j,k}` making up `A_t`, `t = 1..=7`.
pub const A_TERMS: [[(u32, u32, u32); 5]; 7] = [
    [(0, 0, 0), (1, 2, 1), (2, 0, 1), (3, 1, 0), (4, 0, 2)],
    [(0, 1, 0), (1, 3, 1), (2, 1, 1), (4, 0, 0), (3, 0, 3)],
    [(0, 2, 0), (1, 0, 0), (2, 2, 1), (3, 0, 1), (3, 1, 3)],
    [(0, 3, 0), (1, 1, 0), (2, 0, 2), (3, 1, 1), (4, 0, 3)],
    [(0, 4, 0), (1, 2, 0), (2, 0, 0), (2, 1, 2), (4, 0, 1)],
    [(1, 3, 0), (1, 0, 1), (2, 1, 0), (2, 2, 2), (3, 0, 2)],
    [(1, 1, 1), (2, 2, 0), (3, 0, 0), (3, 1, 2), (4, 0, 4)],
];

/// `A_t` for `t = 1..=7` from the explicit `R` lists.
pub fn build_a(t: usize) -> Result<LaurentPoly> {
    if !(1..=7).contains(&t) {
        return Err(Error::IndexOutOfRange(format!("A index {t} not in 1..=7")));
    }
    A_TERMS[t - 1]
        .iter()
        .try_fold(LaurentPoly::zero(), |acc, &(i, j, k)| {
            Ok(acc.add(&build_r(i, j, k)?))
        })
}

/// The quadrinomial to the power `ell`, split by `q`-exponent mod 7:
/// entry `s` collects every multinomial term with `2i + j + 3k = s (mod 7)`.
/// For `ell = 4`, entry `s` is `A_{s+1}`.
pub fn residue_blocks(ell: u32) -> [LaurentPoly; 7] {
    let mut blocks: [LaurentPoly; 7] = Default::default();
    for i in 0..=ell {
        for j in 0..=ell - i {
            for k in 0..=i {
                let t = multinomial_term(ell, i, j, k).expect("indices in range");
                let s = ((2 * i + j + 3 * k) % 7) as usize;
                blocks[s] = blocks[s].add(&t);
            }
        }
    }
    blocks
}

/// 7x7 matrix whose `(i, j)` entry is `blocks[(i - j) mod 7]`.
pub fn circulant(blocks: &[LaurentPoly; 7]) -> PolyMatrix {
    PolyMatrix::from_fn(7, |i, j| blocks[(i + 7 - j) % 7].clone())
}

/// `A`, with `(i, j)` entry `A_{((i - j) mod 7) + 1}`, from the explicit lists.
pub fn build_matrix_a() -> PolyMatrix {
    let blocks: [LaurentPoly; 7] = std::array::from_fn(|s| build_a(s + 1).unwrap());
    circulant(&blocks)
}

/// `A` for an arbitrary power of the quadrinomial.
pub fn build_matrix_a_ell(ell: u32) -> PolyMatrix {
    circulant(&residue_blocks(ell))
}

/// `W`: `F1` on the diagonal, `-q F2`, `-q^2` on the next two subdiagonals
/// and `q^5 F3` five below, all wrapping around.
pub fn build_matrix_w() -> PolyMatrix {
    let mut blocks: [LaurentPoly; 7] = Default::default();
    blocks[0] = LaurentPoly::f1();
    blocks[1] = LaurentPoly::mono(-1, 0, 1, 0, 1);
    blocks[2] = LaurentPoly::mono(-1, 0, 0, 0, 2);
    blocks[5] = LaurentPoly::mono(1, 0, 0, 1, 5);
    circulant(&blocks)
}
