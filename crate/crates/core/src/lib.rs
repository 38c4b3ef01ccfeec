//! Exact-arithmetic kernel for the witness identities behind
//! `p(49n + r) = 0 (mod 49)`, `r` in {19, 33, 40}.
//!
//! Layers, bottom up:
//!
//! - [`series`]: truncated power series in `q` over big integers.
//! - [`qseries`]: `f_n`, Pochhammer products, and the `f_{j,7}` quotients.
//! - [`partition`]: `p(n)`, two-color partitions, congruence sweeps.
//! - [`symbolic`]: Laurent polynomials in `F1, F2, F3, q`, the circulant
//!   matrices of the 7-dissection, determinants, cofactors and the normal
//!   form modulo the `f_{j,7}` relations.
//! - [`witness`]: the coefficient tables, the witness identities, and their
//!   re-derivation from the matrix method.

pub mod classical;
pub mod error;
pub mod partition;
pub mod qseries;
pub mod series;
pub mod symbolic;
pub mod witness;

pub use error::{Error, Result};
pub use series::{Agreement, Series};

pub use num_bigint::BigInt;

/// Serde adapter writing big integers as decimal strings.
pub mod bigint_str {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| D::Error::custom(format!("not a decimal integer: {s:?}")))
    }

    /// Same, for sequences.
    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for x in v {
                seq.serialize_element(&x.to_str_radix(10))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|s| {
                    s.trim()
                        .parse::<BigInt>()
                        .map_err(|_| D::Error::custom(format!("not a decimal integer: {s:?}")))
                })
                .collect()
        }
    }
}
