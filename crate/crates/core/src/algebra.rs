//! Sparse Laurent polynomials in one variable `v`.
//!
//! Characters of `SL₂`-representations live here: a representation with
//! weight spaces `W_i` has character `Σ dim(W_i) v^i`. Quantum characters
//! such as `[2]` evaluated at `v^{p^k}` are supported on a handful of huge
//! exponents, so terms are kept in an ordered sparse map rather than a dense
//! array. The coefficient ring is generic; characters use [`BigInt`].

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Num, NumAssign, One, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient rings usable in a [`LaurentPolynomial`].
pub trait Coefficient: Num + NumAssign + Neg<Output = Self> + Clone {}

impl<T: Num + NumAssign + Neg<Output = T> + Clone> Coefficient for T {}

/// A finite sum `Σ c_e v^e` with `e ∈ ℤ`.
///
/// Zero coefficients are never stored, so derived equality is equality of
/// polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> Default for LaurentPolynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> LaurentPolynomial<C> {
    pub fn monomial(exponent: i64, coefficient: C) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponent, coefficient);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `[b]` evaluated at `x = v^a`, i.e. `v^{-a(b-1)} + v^{-a(b-3)} + … + v^{a(b-1)}`.
    pub fn bracket(b: i64, a: i64) -> Result<Self> {
        if b < 1 {
            return Err(Error::domain(format!("bracket needs b >= 1, got {b}")));
        }
        if a == 0 {
            return Err(Error::domain("bracket needs a nonzero substitution exponent"));
        }
        let terms = (0..b).map(|k| (a * (2 * k - (b - 1)), C::one()));
        Ok(Self::from_terms(terms))
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: C) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self -= factor · other`, in place.
    pub fn sub_scaled(&mut self, other: &Self, factor: &C) {
        for (&e, c) in &other.terms {
            self.add_term(e, -(c.clone() * factor.clone()));
        }
    }

    pub fn coefficient(&self, exponent: i64) -> C {
        self.terms.get(&exponent).cloned().unwrap_or_else(C::zero)
    }

    /// Maximal exponent with its coefficient; `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(i64, &C)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    pub fn trailing_term(&self) -> Option<(i64, &C)> {
        self.terms.iter().next().map(|(&e, c)| (e, c))
    }

    /// Value at `v = 1`: the dimension when `self` is a character.
    pub fn evaluate_at_one(&self) -> C {
        self.terms.values().fold(C::zero(), |mut acc, c| {
            acc += c.clone();
            acc
        })
    }

    /// Substitutes `v ↦ v^a`.
    pub fn substitute_power(&self, a: i64) -> Result<Self> {
        if a == 0 {
            return Err(Error::domain("substitution exponent must be nonzero"));
        }
        Ok(Self::from_terms(self.terms.iter().map(|(&e, c)| (e * a, c.clone()))))
    }

    /// `coeff(d) == coeff(-d)` for every `d`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&e, c)| self.terms.get(&-e).is_some_and(|d| d == c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in exponent-descending order.
    pub fn terms_descending(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.terms.iter().rev().map(|(&e, c)| (e, c))
    }

    pub fn terms_ascending(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl<C: Coefficient> Zero for LaurentPolynomial<C> {
    fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for LaurentPolynomial<C> {
    fn one() -> Self {
        Self::monomial(0, C::one())
    }
}

impl<C: Coefficient> Add<&LaurentPolynomial<C>> for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;

    fn add(self, rhs: &LaurentPolynomial<C>) -> LaurentPolynomial<C> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub<&LaurentPolynomial<C>> for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;

    fn sub(self, rhs: &LaurentPolynomial<C>) -> LaurentPolynomial<C> {
        let mut out = self.clone();
        out.sub_scaled(rhs, &C::one());
        out
    }
}

impl<C: Coefficient> Mul<&LaurentPolynomial<C>> for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;

    fn mul(self, rhs: &LaurentPolynomial<C>) -> LaurentPolynomial<C> {
        let (small, large) = if self.terms.len() <= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = LaurentPolynomial::zero();
        for (&e, c) in &small.terms {
            for (&f, d) in &large.terms {
                out.add_term(e + f, c.clone() * d.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;

    fn neg(self) -> LaurentPolynomial<C> {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<C: Coefficient> $tr<LaurentPolynomial<C>> for LaurentPolynomial<C> {
            type Output = LaurentPolynomial<C>;

            fn $method(self, rhs: LaurentPolynomial<C>) -> LaurentPolynomial<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<C: Coefficient> Neg for LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;

    fn neg(self) -> LaurentPolynomial<C> {
        -&self
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for LaurentPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms_descending().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let unit = c.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{c}*v")?,
                (_, true) => write!(f, "v^{e}")?,
                (_, false) => write!(f, "{c}*v^{e}")?,
            }
        }
        Ok(())
    }
}

struct TermRef<'a, C>(i64, &'a C);

impl<C: fmt::Display> Serialize for TermRef<'_, C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Term", 2)?;
        st.serialize_field("exp", &self.0)?;
        st.serialize_field("coeff", &self.1.to_string())?;
        st.end()
    }
}

/// Serialized as an exponent-descending list of `{"exp": e, "coeff": "c"}`
/// with coefficients as decimal strings.
impl<C: Coefficient + fmt::Display> Serialize for LaurentPolynomial<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in self.terms_descending() {
            seq.serialize_element(&TermRef(e, c))?;
        }
        seq.end()
    }
}

/// `v + v^{-1}`, the character of the vector representation of `SL₂`.
pub fn vector_character() -> LaurentPolynomial<BigInt> {
    LaurentPolynomial::from_terms([(1, BigInt::one()), (-1, BigInt::one())])
}

/// `(v + v^{-1})^n`, the character of the `n`-th tensor power.
pub fn tensor_power_character(n: u32) -> LaurentPolynomial<BigInt> {
    vector_character().pow(n)
}
