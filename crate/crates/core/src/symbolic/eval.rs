//! Evaluation of Laurent polynomials as truncated series.

use std::collections::HashMap;

use super::poly::LaurentPoly;
use crate::error::Result;
use crate::qseries::{f7_blocks, f7_blocks_at_q7};
use crate::series::Series;

/// Integer powers of a unit series, computed on demand and kept.
#[derive(Debug, Clone)]
pub struct PowerCache {
    base: Series,
    inverse: Option<Series>,
    powers: HashMap<i64, Series>,
}

impl PowerCache {
    pub fn new(base: Series) -> Self {
        PowerCache {
            base,
            inverse: None,
            powers: HashMap::new(),
        }
    }

    pub fn get(&mut self, e: i64) -> Result<&Series> {
        if !self.powers.contains_key(&e) {
            let v = if e == 0 {
                Series::one(self.base.order())
            } else if e > 0 {
                // reuse the nearest lower power if present
                match self.powers.get(&(e - 1)) {
                    Some(prev) => prev.mul(&self.base),
                    None => self.base.pow(e)?,
                }
            } else {
                if self.inverse.is_none() {
                    self.inverse = Some(self.base.inverse()?);
                }
                let inv = self.inverse.as_ref().unwrap();
                match self.powers.get(&(e + 1)) {
                    Some(prev) => prev.mul(inv),
                    None => inv.pow(-e)?,
                }
            };
            self.powers.insert(e, v);
        }
        Ok(&self.powers[&e])
    }
}

/// Evaluate with `F1, F2, F3` replaced by the given series and `q` by `q`.
pub fn eval_with_blocks(p: &LaurentPoly, blocks: &[Series; 3]) -> Result<Series> {
    let order = blocks.iter().map(Series::order).min().unwrap_or(0);
    let mut caches: Vec<PowerCache> = blocks.iter().cloned().map(PowerCache::new).collect();
    // Walk exponents in ascending order so the power caches grow incrementally.
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by_key(|(m, _)| (m.f[0].abs(), m.f[1].abs(), m.f[2].abs()));
    let mut acc = Series::zero(order);
    for (m, c) in terms {
        if m.q as usize >= order {
            continue;
        }
        let mut t = caches[0].get(m.f[0] as i64)?.clone();
        for (cache, &e) in caches.iter_mut().zip(&m.f).skip(1) {
            if e != 0 {
                t = t.mul(cache.get(e as i64)?);
            }
        }
        acc = acc.add(&t.scale(c).shift(m.q as usize));
    }
    Ok(acc)
}

/// `p` as a series in `q` with `Fj = f_{j,7}(q^7)`.
pub fn eval_poly(p: &LaurentPoly, order: usize) -> Result<Series> {
    eval_with_blocks(p, &f7_blocks_at_q7(order))
}

/// `p` as a series with `Fj = f_{j,7}(q)`, i.e. after relabelling `q^7 -> q`
/// in the blocks. Only meaningful for polynomials free of `q`.
pub fn eval_poly_relabelled(p: &LaurentPoly, order: usize) -> Result<Series> {
    eval_with_blocks(p, &f7_blocks(order))
}
