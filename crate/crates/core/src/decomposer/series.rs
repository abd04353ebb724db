use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::peel;
use crate::algebra::vector_character;
use crate::combinatorics::MixedCharacteristic;
use crate::error::{Error, Result};
use crate::numeric::ln_biguint;
use crate::sl2_tilting::TiltingCache;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Sl2,
    Glm,
    Super,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sl2 => "sl2",
            Family::Glm => "glm",
            Family::Super => "super",
        })
    }
}

/// `b_0, …, b_N` for one group, representation and regime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthSeries {
    pub family: Family,
    pub mc: MixedCharacteristic,
    /// `M` for `GL_M` / `GL(M|N)`; `2` for `SL₂`.
    pub rank: usize,
    /// `N` for `GL(M|N)`, zero otherwise.
    pub odd_rank: usize,
    pub values: Vec<BigUint>,
}

impl GrowthSeries {
    pub fn new(family: Family, mc: MixedCharacteristic, rank: usize, odd_rank: usize, values: Vec<BigUint>) -> Self {
        Self { family, mc, rank, odd_rank, values }
    }

    /// Dimension of the vector representation.
    pub fn dim_v(&self) -> usize {
        self.rank + self.odd_rank
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `b_n^{1/n}`; `1` at `n = 0` by convention.
    pub fn nth_root(&self, n: usize) -> f64 {
        if n == 0 {
            return 1.0;
        }
        (ln_biguint(&self.values[n]) / n as f64).exp()
    }

    /// `b_n b_m ≤ b_{n+m}` for all indices in range.
    pub fn is_supermultiplicative(&self) -> bool {
        let len = self.values.len();
        (0..len).all(|n| (0..len - n).all(|m| &self.values[n] * &self.values[m] <= self.values[n + m]))
    }

    /// `b_n ≤ (dim V)^n` for every `n`.
    pub fn within_trivial_bound(&self) -> bool {
        let d = BigUint::from(self.dim_v());
        let mut power = BigUint::one();
        for b in &self.values {
            if *b > power {
                return false;
            }
            power *= &d;
        }
        true
    }
}

/// Decomposition of `V ⊗ T(m)` for every `m < m_max`, as lists of
/// `(m', multiplicity)`.
pub fn tensor_with_vector(m_max: u64, mc: MixedCharacteristic, cache: &TiltingCache) -> Result<Vec<Vec<(u64, u64)>>> {
    let v = vector_character();
    (0..m_max)
        .into_par_iter()
        .map(|m| {
            let ch = cache.get(m, mc)?;
            let parts = peel(&v * &*ch, mc, cache)?;
            parts
                .into_iter()
                .map(|(k, c)| {
                    c.to_u64().map(|c| (k, c)).ok_or_else(|| Error::internal("V ⊗ T(m) multiplicity overflow"))
                })
                .collect()
        })
        .collect()
}

/// `b_0, …, b_{n_max}` for `SL₂` in regime `mc`.
///
/// Multiplicity vectors are propagated `n → n + 1` using the decompositions
/// of `V ⊗ T(m)`, which is equivalent to peeling `(v + v^{-1})^n` for every
/// `n` but linear instead of quadratic in the number of weights.
pub fn b_sequence_sl2(n_max: usize, mc: MixedCharacteristic) -> Result<GrowthSeries> {
    let cache = TiltingCache::new();
    let rules = tensor_with_vector(n_max as u64, mc, &cache)?;
    // incoming[k] lists (m, c) with T(k) appearing c times in V ⊗ T(m).
    let mut incoming: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n_max + 1];
    for (m, rule) in rules.iter().enumerate() {
        for &(k, c) in rule {
            incoming[k as usize].push((m, c));
        }
    }
    let mut mult: Vec<BigUint> = vec![BigUint::zero(); n_max + 1];
    mult[0] = BigUint::one();
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(BigUint::one());
    for n in 1..=n_max {
        let next: Vec<BigUint> = (0..=n_max)
            .into_par_iter()
            .map(|k| {
                if k > n || (n - k) % 2 == 1 {
                    return BigUint::zero();
                }
                incoming[k].iter().filter(|(m, _)| *m < n).fold(BigUint::zero(), |acc, &(m, c)| acc + &mult[m] * c)
            })
            .collect();
        mult = next;
        values.push(mult.iter().sum());
    }
    Ok(GrowthSeries::new(Family::Sl2, mc, 2, 0, values))
}
