use num_bigint::BigInt;
use thiserror::Error;

/// Errors produced by the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series constant term {0} is not a unit (must be 1 or -1)")]
    NonUnitConstantTerm(BigInt),

    #[error("series has order {have}, but {needed} coefficients were requested")]
    InsufficientOrder { needed: usize, have: usize },

    #[error("invalid f_{{j,k}} index: j = {j}, k = {k} (need 0 < 2j < k)")]
    InvalidDissectionIndex { j: u32, k: u32 },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("cannot invert a polynomial with {terms} terms (only monomials are invertible)")]
    NonMonomialInverse { terms: usize },

    #[error("matrix dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("values cover indices 0..{have}, but index {needed} is required")]
    InsufficientData { needed: usize, have: usize },

    #[error("table schema error: {0}")]
    SchemaError(String),

    #[error("parse error: {0}")]
    ParseError(String),

    #[error(
        "symbolic and series paths disagree at coefficient {index}: symbolic {symbolic}, series {series}"
    )]
    PipelineMismatch {
        index: usize,
        symbolic: BigInt,
        series: BigInt,
    },

    #[error("reduced form has monomial F1^{f1} F2^{f2} outside the exponent schedule")]
    ScheduleMismatch { f1: i32, f2: i32 },

    #[error("symbolic identity failed: {0}")]
    SymbolicMismatch(String),

    #[error("coefficient {value} is not divisible by {divisor}")]
    IndivisibleCoefficient { divisor: BigInt, value: BigInt },
}

pub type Result<T> = std::result::Result<T, Error>;
