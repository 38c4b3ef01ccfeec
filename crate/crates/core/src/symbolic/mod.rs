//! Exact Laurent-polynomial algebra in `F1, F2, F3` (standing for
//! `f_{1,7}(q^7), f_{2,7}(q^7), f_{3,7}(q^7)`) and `q`.

pub mod dissection;
pub mod eval;
pub mod matrix;
pub mod poly;
pub mod reduce;

pub use dissection::{
    build_a, build_matrix_a, build_matrix_a_ell, build_matrix_w, build_r, circulant,
    multinomial_term, quadrinomial, residue_blocks,
};
pub use eval::{eval_poly, eval_poly_relabelled, eval_with_blocks};
pub use matrix::{cofactor_first_row, det5, matrix_power, PolyMatrix};
pub use poly::{LaurentPoly, Monomial};
pub use reduce::{reduce, relations, ReducedForm, ResidueForms};
