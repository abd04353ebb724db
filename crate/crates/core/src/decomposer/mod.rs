//! Decomposition of `V^{⊗n}` into indecomposable tilting summands, and the
//! summand counts `b_n` for `SL₂`, `GL_M` and `GL(M|N)`.
//!
//! Tilting characters are unitriangular in the weight basis: `ch T(m)` has
//! top term `v^m`. Any tilting character can therefore be decomposed by
//! repeatedly reading off its top coefficient and subtracting that many
//! copies of the matching `ch T(m)`.

mod charzero;
mod series;

use std::collections::BTreeMap;

use num_bigint::{BigUint, Sign};
use num_traits::Zero;
use serde::Serialize;

pub use charzero::{
    b_charzero_glm, b_charzero_super, b_closed_form_sl2_char0, binomial, exterior_power_bound, glm_series,
    restriction_inequality_check, super_series, weyl_dimension,
};
pub use series::{b_sequence_sl2, tensor_with_vector, Family, GrowthSeries};

use crate::algebra::tensor_power_character;
use crate::combinatorics::MixedCharacteristic;
use crate::error::{Error, Result};
use crate::sl2_tilting::{tilting_dimension, TiltingCache};
use crate::Character;

/// Multiplicities of `T(m)` in `V^{⊗n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltingDecomposition {
    pub n: u32,
    pub mc: MixedCharacteristic,
    #[serde(serialize_with = "crate::report::serialize_biguint_map")]
    pub multiplicities: BTreeMap<u64, BigUint>,
    #[serde(serialize_with = "crate::report::serialize_biguint")]
    pub b: BigUint,
}

impl TiltingDecomposition {
    /// `Σ mult(m) · dim T(m)`, which must equal `2^n`.
    pub fn total_dimension(&self) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for (&m, mult) in &self.multiplicities {
            total += mult * BigUint::from(tilting_dimension(m, self.mc)?);
        }
        Ok(total)
    }

    /// Every highest weight has the parity of `n`.
    pub fn has_parity_support(&self) -> bool {
        self.multiplicities.keys().all(|&m| m <= self.n as u64 && m % 2 == self.n as u64 % 2)
    }
}

/// Splits a tilting character into `{m: multiplicity}` by greedy peeling.
///
/// Stops once no term of nonnegative exponent remains; the residual must
/// then vanish because every character involved is symmetric.
pub fn peel(mut chi: Character, mc: MixedCharacteristic, cache: &TiltingCache) -> Result<BTreeMap<u64, BigUint>> {
    let mut out = BTreeMap::new();
    while let Some((m, c)) = chi.leading_term() {
        if m < 0 {
            break;
        }
        let c = c.clone();
        if c.sign() != Sign::Plus {
            return Err(Error::internal(format!("multiplicity {c} of T({m}) in {mc} is not positive")));
        }
        let ch = cache.get(m as u64, mc)?;
        chi.sub_scaled(&ch, &c);
        out.insert(m as u64, c.magnitude().clone());
    }
    if !chi.is_zero() {
        let (e, c) = chi.leading_term().expect("nonzero residual");
        return Err(Error::internal(format!("nonzero residual after peeling in {mc}: leading term {c}·v^{e}")));
    }
    Ok(out)
}

pub fn decompose_tensor_power(n: u32, mc: MixedCharacteristic) -> Result<TiltingDecomposition> {
    decompose_tensor_power_cached(n, mc, &TiltingCache::new())
}

pub fn decompose_tensor_power_cached(
    n: u32,
    mc: MixedCharacteristic,
    cache: &TiltingCache,
) -> Result<TiltingDecomposition> {
    let multiplicities = peel(tensor_power_character(n), mc, cache)?;
    let b = multiplicities.values().sum();
    Ok(TiltingDecomposition { n, mc, multiplicities, b })
}
