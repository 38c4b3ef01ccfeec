use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `F1^f[0] F2^f[1] F3^f[2] q^q`. The `F` exponents may be negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub f: [i32; 3],
    pub q: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { f: [0; 3], q: 0 };

    pub fn new(f1: i32, f2: i32, f3: i32, q: u32) -> Self {
        Monomial { f: [f1, f2, f3], q }
    }

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial {
            f: [
                self.f[0] + other.f[0],
                self.f[1] + other.f[1],
                self.f[2] + other.f[2],
            ],
            q: self.q + other.q,
        }
    }

    /// Weight with `F1 -> 2`, `F2 -> 1`, `F3 -> -3`, `q -> 1`. Every relation
    /// among the `f_{j,7}(q^7)` is homogeneous for it.
    pub fn weight(self) -> i64 {
        2 * self.f[0] as i64 + self.f[1] as i64 - 3 * self.f[2] as i64 + self.q as i64
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in ["F1", "F2", "F3"].iter().zip(self.f) {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        match self.q {
            0 => {}
            1 => parts.push("q".into()),
            e => parts.push(format!("q^{e}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Sparse Laurent polynomial in `F1, F2, F3` (standing for `f_{j,7}(q^7)`)
/// and `q`, with integer coefficients. No zero coefficient is ever stored, so
/// structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// `c * F1^a F2^b F3^c' q^e` from small integers.
    pub fn mono(c: i64, f1: i32, f2: i32, f3: i32, q: u32) -> Self {
        Self::term(BigInt::from(c), Monomial::new(f1, f2, f3, q))
    }

    pub fn f1() -> Self {
        Self::mono(1, 1, 0, 0, 0)
    }
    pub fn f2() -> Self {
        Self::mono(1, 0, 1, 0, 0)
    }
    pub fn f3() -> Self {
        Self::mono(1, 0, 0, 1, 0)
    }
    pub fn q() -> Self {
        Self::mono(1, 0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(it: I) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in it {
            *acc.entry(m).or_default() += c;
        }
        Self::from_accumulator(acc)
    }

    fn from_accumulator(acc: HashMap<Monomial, BigInt>) -> Self {
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.len().max(other.len()) * 4);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.times(*mb)).or_default() += ca * cb;
            }
        }
        Self::from_accumulator(acc)
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut sq = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// Inverse of a single term `±F1^a F2^b F3^c`. A `q` power or a coefficient
    /// other than ±1 has no Laurent inverse here.
    pub fn inverse_monomial(&self) -> Result<LaurentPoly> {
        if self.len() != 1 {
            return Err(Error::NonMonomialInverse { terms: self.len() });
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if !c.abs().is_one() || m.q != 0 {
            return Err(Error::NonMonomialInverse { terms: 1 });
        }
        Ok(LaurentPoly::term(
            c.clone(),
            Monomial::new(-m.f[0], -m.f[1], -m.f[2], 0),
        ))
    }

    /// Drop every term whose monomial fails the predicate.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn max_q(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.q).max()
    }

    /// Common weight of all terms, if the polynomial is homogeneous.
    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|m| m.weight());
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}
