//! Indecomposable tilting characters `ch T(m)` for `SL₂` and quantum `SL₂`.
//!
//! Write `m + 1 = (a_n, …, a_0)` in the `(p, ℓ)`-adic expansion. Then
//!
//! ```text
//! ch T(m) = [a_n p^{(n)}]_v · Π_{i<n, a_i≠0} [2]_{v^{a_i p^{(i)}}}
//! ```
//!
//! Classical characteristic `p` is the pair `(p, p)` and characteristic zero
//! is `(∞, ∞)`, so one formula covers every regime.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::One;

use crate::combinatorics::{mixed_digits, ExtNat, MixedCharacteristic};
use crate::error::{Error, Result};
use crate::Character;

/// A highest weight `m` together with the regime it is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TiltingCharacterRequest {
    pub m: u64,
    pub mc: MixedCharacteristic,
}

/// Digits of `m + 1` paired with their place values, most significant first.
fn weighted_digits(m: u64, mc: MixedCharacteristic) -> Result<Vec<(u64, u64)>> {
    let x = m.checked_add(1).ok_or_else(|| Error::domain("highest weight too large"))?;
    let digits = mixed_digits(x, mc)?;
    let top = digits.len() - 1;
    digits
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            let place = mc
                .place_value(top - k)
                .ok_or_else(|| Error::internal(format!("place value {} undefined for {mc}", top - k)))?;
            Ok((a, place))
        })
        .collect()
}

pub fn tilting_character(m: u64, mc: MixedCharacteristic) -> Result<Character> {
    let digits = weighted_digits(m, mc)?;
    let to_i64 = |v: u64| i64::try_from(v).map_err(|_| Error::domain("exponent exceeds i64"));
    let (a_top, place_top) = digits[0];
    let mut ch = Character::bracket(to_i64(a_top * place_top)?, 1)?;
    for &(a, place) in &digits[1..] {
        if a != 0 {
            ch = &ch * &Character::bracket(2, to_i64(a * place)?)?;
        }
    }
    Ok(ch)
}

/// `dim T(m) = 2^k · a_n · p^{(n)}` with `k` the number of nonzero lower
/// digits. Exact: the value is at most `(m + 1)²`.
pub fn tilting_dimension(m: u64, mc: MixedCharacteristic) -> Result<u128> {
    let digits = weighted_digits(m, mc)?;
    let (a_top, place_top) = digits[0];
    let k = digits[1..].iter().filter(|(a, _)| *a != 0).count() as u32;
    Ok((1u128 << k) * a_top as u128 * place_top as u128)
}

/// `α = 1 + 1/log₂ min(p, ℓ)`, or `1` when `ℓ = ∞`.
pub fn alpha_exponent(mc: MixedCharacteristic) -> f64 {
    match mc.ell() {
        ExtNat::Infinite => 1.0,
        ExtNat::Finite(_) => 1.0 + 1.0 / mc.smallest_base().log2(),
    }
}

/// Memoized tilting characters, shareable across threads.
#[derive(Default)]
pub struct TiltingCache {
    entries: RwLock<HashMap<TiltingCharacterRequest, Arc<Character>>>,
}

impl TiltingCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, m: u64, mc: MixedCharacteristic) -> Result<Arc<Character>> {
        let key = TiltingCharacterRequest { m, mc };
        if let Some(ch) = self.entries.read().expect("cache lock poisoned").get(&key) {
            return Ok(Arc::clone(ch));
        }
        let ch = Arc::new(tilting_character(m, mc)?);
        let mut guard = self.entries.write().expect("cache lock poisoned");
        Ok(Arc::clone(guard.entry(key).or_insert(ch)))
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Upper bound `(m + 1)^α` from the digit argument.
pub fn dimension_bound(m: u64, mc: MixedCharacteristic) -> f64 {
    ((m + 1) as f64).powf(alpha_exponent(mc))
}

/// Whether `ch T(m)` has top term `v^m` with coefficient one.
pub fn is_unitriangular(ch: &Character, m: u64) -> bool {
    matches!(ch.leading_term(), Some((e, c)) if e == m as i64 && c.is_one())
}
