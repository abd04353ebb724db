//! Extended naturals `ℕ ∪ {∞}`, mixed characteristic pairs `(p, ℓ)` and the
//! `(p, ℓ)`-adic digit expansion that drives the `SL₂` tilting characters.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A natural number or `∞`. `Finite(_) < Infinite` for every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

impl ExtNat {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(v) => Some(v),
            ExtNat::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ExtNat::Infinite
    }

    /// `log₂` of the value; `+∞` for `Infinite`.
    pub fn log2(self) -> f64 {
        match self {
            ExtNat::Finite(v) => (v as f64).log2(),
            ExtNat::Infinite => f64::INFINITY,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for ExtNat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(ExtNat::Infinite),
            other => other
                .parse::<u64>()
                .map(ExtNat::Finite)
                .map_err(|_| Error::domain(format!("expected a natural number or 'inf', got {other:?}"))),
        }
    }
}

impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Which of the four representation-theoretic regimes a pair `(p, ℓ)` is in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `ℓ = ∞`: everything is semisimple.
    Semisimple,
    /// `(∞, ℓ)` with `ℓ` finite.
    ComplexQuantum,
    /// `p, ℓ` finite and different.
    StrictlyMixed,
    /// `p = ℓ` finite: classical characteristic `p`.
    Classical,
}

/// The pair `(p, ℓ)`: the additive order of `1` and the multiplicative
/// order of `q²` in the ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MixedCharacteristic {
    p: ExtNat,
    ell: ExtNat,
}

impl MixedCharacteristic {
    pub fn new(p: ExtNat, ell: ExtNat) -> Result<Self> {
        if let ExtNat::Finite(v) = p {
            if !is_prime(v) {
                return Err(Error::domain(format!("p must be prime or inf, got {v}")));
            }
        }
        if let ExtNat::Finite(v) = ell {
            if v < 2 {
                return Err(Error::domain(format!("ell must be >= 2 or inf, got {v}")));
            }
        }
        Ok(Self { p, ell })
    }

    /// Classical characteristic `p`, encoded as `(p, p)`.
    pub fn classical(p: u64) -> Result<Self> {
        Self::new(ExtNat::Finite(p), ExtNat::Finite(p))
    }

    /// Characteristic zero, encoded as `(∞, ∞)`.
    pub fn char_zero() -> Self {
        Self { p: ExtNat::Infinite, ell: ExtNat::Infinite }
    }

    pub fn p(&self) -> ExtNat {
        self.p
    }

    pub fn ell(&self) -> ExtNat {
        self.ell
    }

    pub fn regime(&self) -> Regime {
        match (self.p, self.ell) {
            (_, ExtNat::Infinite) => Regime::Semisimple,
            (ExtNat::Infinite, ExtNat::Finite(_)) => Regime::ComplexQuantum,
            (ExtNat::Finite(p), ExtNat::Finite(l)) if p == l => Regime::Classical,
            _ => Regime::StrictlyMixed,
        }
    }

    /// `min(p, ℓ)`, the base controlling the growth of tilting dimensions.
    pub fn smallest_base(&self) -> ExtNat {
        self.p.min(self.ell)
    }

    /// Place value `p^{(i)}`: `1` for `i = 0` and `p^{i-1}ℓ` otherwise.
    /// `None` when the place value is infinite or overflows `u64`.
    pub fn place_value(&self, i: usize) -> Option<u64> {
        if i == 0 {
            return Some(1);
        }
        let ell = self.ell.finite()?;
        if i == 1 {
            return Some(ell);
        }
        let p = self.p.finite()?;
        p.checked_pow(u32::try_from(i - 1).ok()?)?.checked_mul(ell)
    }
}

impl fmt::Display for MixedCharacteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.ell)
    }
}

/// `(p, ℓ)`-adic digits of `x`, most significant first: `x = Σ a_i p^{(i)}`
/// with `a_0 < ℓ`, `a_i < p` for `i > 0`, and a nonzero leading digit.
pub fn mixed_digits(x: u64, mc: MixedCharacteristic) -> Result<Vec<u64>> {
    if x == 0 {
        return Err(Error::domain("digit expansion needs x >= 1"));
    }
    let ell = match mc.ell {
        ExtNat::Infinite => return Ok(vec![x]),
        ExtNat::Finite(l) => l,
    };
    let mut digits = vec![x % ell];
    let mut rest = x / ell;
    match mc.p {
        ExtNat::Infinite => {
            if rest > 0 {
                digits.push(rest);
            }
        }
        ExtNat::Finite(p) => {
            while rest > 0 {
                digits.push(rest % p);
                rest /= p;
            }
        }
    }
    digits.reverse();
    Ok(digits)
}

/// `p`-adic digits of `x`, most significant first. For `p = ∞` this is the
/// single digit `(x)`.
pub fn padic_digits(x: u64, p: ExtNat) -> Result<Vec<u64>> {
    if x == 0 {
        return Err(Error::domain("digit expansion needs x >= 1"));
    }
    let p = match p {
        ExtNat::Infinite => return Ok(vec![x]),
        ExtNat::Finite(p) if p < 2 => return Err(Error::domain(format!("digit base must be >= 2, got {p}"))),
        ExtNat::Finite(p) => p,
    };
    let mut digits = Vec::new();
    let mut rest = x;
    while rest > 0 {
        digits.push(rest % p);
        rest /= p;
    }
    digits.reverse();
    Ok(digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtNat::{Finite as F, Infinite as Inf};

    fn mc(p: ExtNat, l: ExtNat) -> MixedCharacteristic {
        MixedCharacteristic::new(p, l).unwrap()
    }

    fn reconstruct(digits: &[u64], m: MixedCharacteristic) -> u64 {
        digits.iter().rev().enumerate().map(|(i, &d)| if d == 0 { 0 } else { d * m.place_value(i).unwrap() }).sum()
    }

    #[test]
    fn digits_of_fifty_three() {
        assert_eq!(padic_digits(53, F(2)).unwrap(), vec![1, 1, 0, 1, 0, 1]);
        assert_eq!(padic_digits(1, F(7)).unwrap(), vec![1]);
        assert_eq!(padic_digits(53, Inf).unwrap(), vec![53]);
        assert_eq!(mixed_digits(53, mc(F(2), F(3))).unwrap(), vec![1, 0, 0, 0, 1, 2]);
        assert_eq!(mixed_digits(53, mc(Inf, F(3))).unwrap(), vec![17, 2]);
        assert_eq!(mixed_digits(53, mc(F(2), F(2))).unwrap(), vec![1, 1, 0, 1, 0, 1]);
        assert_eq!(mixed_digits(53, mc(F(5), Inf)).unwrap(), vec![53]);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(padic_digits(0, F(2)).is_err());
        assert!(mixed_digits(0, MixedCharacteristic::char_zero()).is_err());
    }

    #[test]
    fn validation_and_regimes() {
        assert!(MixedCharacteristic::new(F(4), F(4)).is_err());
        assert!(MixedCharacteristic::new(F(2), F(1)).is_err());
        assert!(MixedCharacteristic::new(F(2), F(4)).is_ok());
        assert_eq!(mc(F(3), Inf).regime(), Regime::Semisimple);
        assert_eq!(mc(Inf, Inf).regime(), Regime::Semisimple);
        assert_eq!(mc(Inf, F(4)).regime(), Regime::ComplexQuantum);
        assert_eq!(mc(F(2), F(3)).regime(), Regime::StrictlyMixed);
        assert_eq!(mc(F(3), F(3)).regime(), Regime::Classical);
        assert!(F(1_000_000) < Inf);
        assert_eq!("inf".parse::<ExtNat>().unwrap(), Inf);
        assert_eq!("7".parse::<ExtNat>().unwrap(), F(7));
        assert!("x".parse::<ExtNat>().is_err());
    }

    #[test]
    fn digits_round_trip_on_grid() {
        let bases = [F(2), F(3), F(5), F(7), Inf];
        let ells = [F(2), F(3), F(4), F(5), F(7), Inf];
        for &p in &bases {
            for &l in &ells {
                let m = mc(p, l);
                for x in 1..=100_000u64 {
                    let d = mixed_digits(x, m).unwrap();
                    assert_ne!(d[0], 0);
                    let a0 = *d.last().unwrap();
                    if let Some(l) = l.finite() {
                        assert!(a0 < l);
                    }
                    if let Some(p) = p.finite() {
                        assert!(d[..d.len() - 1].iter().all(|&a| a < p));
                    }
                    assert_eq!(reconstruct(&d, m), x, "x={x} mc={m}");
                }
            }
        }
    }

    #[test]
    fn mixed_digits_specialise_to_padic() {
        for p in [2u64, 3, 5, 7] {
            let m = MixedCharacteristic::classical(p).unwrap();
            for x in 1..=10_000 {
                assert_eq!(mixed_digits(x, m).unwrap(), padic_digits(x, F(p)).unwrap());
            }
        }
    }
}
