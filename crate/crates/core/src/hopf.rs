//! Matrices `E ∈ GL_m` with `tr(Eᵀ E⁻¹) = −2`.
//!
//! Such an `E` defines a nonsymmetric fiber functor on the `SL₂`
//! representation category sending `V` to an `m`-dimensional space, so the
//! summand growth rate `β = 2` stays below `m`. The ansatz is
//! `E = diag(I_{m−2}, [[0, x], [−1, 0]])`.
//!
//! The scalar equation for `x` is not hard-coded: it is obtained by
//! evaluating the trace on the ansatz over Laurent polynomials in `x`, and
//! the root is then checked by an exact `m × m` inversion over `ℚ(√d)`.
//! The equation comes out as `x² − m·x + 1 = 0`, whose discriminant
//! `m² − 4` is nonnegative for every `m ≥ 2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::LaurentPolynomial;
use crate::error::{Error, Result};

/// `a + b√d`. Elements with `b = 0` are compatible with every `d`.
#[derive(Clone, Debug)]
pub struct Quadratic<T> {
    pub a: T,
    pub b: T,
    pub d: T,
}

impl<T: Clone + Num + Neg<Output = T>> Quadratic<T> {
    pub fn new(a: T, b: T, d: T) -> Self {
        Self { a, b, d }
    }

    pub fn rational(a: T) -> Self {
        Self { a, b: T::zero(), d: T::zero() }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn radicand(&self, other: &Self) -> T {
        if self.b.is_zero() {
            other.d.clone()
        } else if other.b.is_zero() || self.d == other.d {
            self.d.clone()
        } else {
            panic!("mixing elements of different quadratic fields")
        }
    }

    pub fn conjugate(&self) -> Self {
        Self { a: self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }

    /// `a² − d b²`.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - self.d.clone() * self.b.clone() * self.b.clone()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(Self { a: c.a / n.clone(), b: c.b / n, d: c.d })
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        Some(self.clone() * other.inverse()?)
    }
}

impl<T: Clone + Num + Neg<Output = T>> PartialEq for Quadratic<T> {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl<T: Clone + Num + Neg<Output = T>> Add for Quadratic<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let d = self.radicand(&o);
        Self { a: self.a + o.a, b: self.b + o.b, d }
    }
}

impl<T: Clone + Num + Neg<Output = T>> Sub for Quadratic<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let d = self.radicand(&o);
        Self { a: self.a - o.a, b: self.b - o.b, d }
    }
}

impl<T: Clone + Num + Neg<Output = T>> Mul for Quadratic<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let d = self.radicand(&o);
        Self {
            a: self.a.clone() * o.a.clone() + self.b.clone() * o.b.clone() * d.clone(),
            b: self.a * o.b + self.b * o.a,
            d,
        }
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for Quadratic<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b, d: self.d }
    }
}

impl<T: Clone + Num + Neg<Output = T>> Zero for Quadratic<T> {
    fn zero() -> Self {
        Self::rational(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Clone + Num + Neg<Output = T>> One for Quadratic<T> {
    fn one() -> Self {
        Self::rational(T::one())
    }
}

impl<T: Clone + Num + Neg<Output = T> + ToPrimitive> Quadratic<T> {
    pub fn to_f64(&self) -> Option<f64> {
        let (a, b, d) = (self.a.to_f64()?, self.b.to_f64()?, self.d.to_f64()?);
        Some(if self.b.is_zero() { a } else { a + b * d.sqrt() })
    }
}

impl<T: Clone + Num + Neg<Output = T> + Signed + fmt::Display> fmt::Display for Quadratic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let surd = |f: &mut fmt::Formatter<'_>, b: &T| {
            if b.is_one() {
                write!(f, "sqrt({})", self.d)
            } else {
                write!(f, "{}*sqrt({})", b, self.d)
            }
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                f.write_str("-")?;
            }
            return surd(f, &self.b.abs());
        }
        write!(f, "{} {} ", self.a, if self.b.is_negative() { "-" } else { "+" })?;
        surd(f, &self.b.abs())
    }
}

impl<T: Clone + Num + Neg<Output = T> + Signed + fmt::Display> Serialize for Quadratic<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub type QuadraticRational = Quadratic<BigRational>;

type Matrix<T> = Vec<Vec<Quadratic<T>>>;

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Gauss–Jordan inverse; `None` when singular.
fn invert<T: Clone + Num + Neg<Output = T>>(e: &Matrix<T>) -> Option<Matrix<T>> {
    let n = e.len();
    let mut a: Matrix<T> = e.clone();
    let mut inv: Matrix<T> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Quadratic::one() } else { Quadratic::zero() }).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].inverse()?;
        for j in 0..n {
            a[col][j] = a[col][j].clone() * scale.clone();
            inv[col][j] = inv[col][j].clone() * scale.clone();
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                a[r][j] = a[r][j].clone() - f.clone() * a[col][j].clone();
                inv[r][j] = inv[r][j].clone() - f.clone() * inv[col][j].clone();
            }
        }
    }
    Some(inv)
}

fn determinant<T: Clone + Num + Neg<Output = T>>(e: &Matrix<T>) -> Quadratic<T> {
    let n = e.len();
    let mut a = e.clone();
    let mut det = Quadratic::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else { return Quadratic::zero() };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col].clone();
        det = det * p.clone();
        let p_inv = p.inverse().expect("pivot is nonzero");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() * p_inv.clone();
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = x.clone() - f.clone() * y.clone();
            }
        }
    }
    det
}

/// `Σ_{ij} E_{ji} (E⁻¹)_{ji}` restricted to the diagonal indices in `rows`.
fn diagonal_trace<T: Clone + Num + Neg<Output = T>>(
    e: &Matrix<T>,
    inv: &Matrix<T>,
    rows: std::ops::Range<usize>,
) -> Quadratic<T> {
    let n = e.len();
    rows.fold(Quadratic::zero(), |acc, i| (0..n).fold(acc, |acc, j| acc + e[j][i].clone() * inv[j][i].clone()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiberMatrix {
    pub m: usize,
    /// The ansatz parameter, if the matrix has the block shape.
    pub x: Option<QuadraticRational>,
    pub entries: Vec<Vec<QuadraticRational>>,
}

impl FiberMatrix {
    pub fn from_entries(entries: Vec<Vec<QuadraticRational>>) -> Result<Self> {
        let m = entries.len();
        if m == 0 || entries.iter().any(|r| r.len() != m) {
            return Err(Error::domain("E must be a nonempty square matrix"));
        }
        Ok(Self { m, x: None, entries })
    }

    pub fn identity(m: usize) -> Result<Self> {
        Self::from_entries(
            (0..m)
                .map(|i| (0..m).map(|j| if i == j { Quadratic::one() } else { Quadratic::zero() }).collect())
                .collect(),
        )
    }

    /// `diag(I_{m−2}, [[0, x], [−1, 0]])`.
    pub fn block_ansatz(m: usize, x: QuadraticRational) -> Result<Self> {
        if m < 2 {
            return Err(Error::domain(format!("E needs m >= 2, got {m}")));
        }
        let mut e = Self::identity(m)?;
        e.entries[m - 2][m - 2] = Quadratic::zero();
        e.entries[m - 2][m - 1] = x.clone();
        e.entries[m - 1][m - 2] = Quadratic::rational(rat(-1));
        e.entries[m - 1][m - 1] = Quadratic::zero();
        e.x = Some(x);
        Ok(e)
    }

    pub fn determinant(&self) -> QuadraticRational {
        determinant(&self.entries)
    }

    pub fn inverse(&self) -> Result<Vec<Vec<QuadraticRational>>> {
        invert(&self.entries).ok_or_else(|| Error::domain("E is singular"))
    }

    /// Contributions of the leading `m − 2` diagonal entries and of the last
    /// two to `tr(Eᵀ E⁻¹)`.
    pub fn block_traces(&self) -> Result<(QuadraticRational, QuadraticRational)> {
        let inv = self.inverse()?;
        let split = self.m.saturating_sub(2);
        Ok((diagonal_trace(&self.entries, &inv, 0..split), diagonal_trace(&self.entries, &inv, split..self.m)))
    }
}

/// Coefficients `[c₀, c₁, c₂]` of the monic polynomial whose roots make the
/// ansatz satisfy `tr(Eᵀ E⁻¹) = −2`.
pub fn governing_equation(m: usize) -> Result<Vec<BigRational>> {
    type P = LaurentPolynomial<BigRational>;
    if m < 2 {
        return Err(Error::domain(format!("E needs m >= 2, got {m}")));
    }
    let x = P::monomial(1, BigRational::one());
    let b = [[P::zero(), x], [-P::one(), P::zero()]];
    let det = &(&b[0][0] * &b[1][1]) - &(&b[0][1] * &b[1][0]);
    let (k, c) = match det.leading_term() {
        Some((k, c)) if det.num_terms() == 1 => (k, c.clone()),
        _ => return Err(Error::internal(format!("block determinant {det} is not a unit"))),
    };
    let det_inv = P::monomial(-k, c.recip());
    let inv = [[&b[1][1] * &det_inv, -(&b[0][1] * &det_inv)], [-(&b[1][0] * &det_inv), &b[0][0] * &det_inv]];
    let mut condition = P::monomial(0, rat(m as i64 - 2) + rat(2));
    for i in 0..2 {
        for j in 0..2 {
            condition = condition + &b[j][i] * &inv[j][i];
        }
    }
    let (low, _) = condition.trailing_term().ok_or_else(|| Error::internal("trace condition vanishes identically"))?;
    let (high, lead) = condition.leading_term().expect("nonzero");
    let lead = lead.clone();
    Ok((low..=high).map(|e| condition.coefficient(e) / lead.clone()).collect())
}

/// Real roots of `c₀ + c₁x + c₂x²` (or a linear polynomial) in `ℚ(√d)`,
/// the `+√` root first.
pub fn solve_quadratic(coeffs: &[BigRational]) -> Result<Vec<QuadraticRational>> {
    match coeffs {
        [c0, c1] if !c1.is_zero() => Ok(vec![Quadratic::rational(-c0.clone() / c1.clone())]),
        [c0, c1, c2] if !c2.is_zero() => {
            let disc = c1.clone() * c1.clone() - rat(4) * c0.clone() * c2.clone();
            if disc.is_negative() {
                return Err(Error::domain(format!("no real admissible x: discriminant {disc} < 0")));
            }
            let two_a = rat(2) * c2.clone();
            // √(p/q) = √(pq)/q.
            let radicand = disc.numer() * disc.denom();
            let root = radicand.sqrt();
            if &root * &root == radicand {
                let s = BigRational::new(root, disc.denom().clone());
                let mut roots = vec![Quadratic::rational((-c1.clone() + s.clone()) / two_a.clone())];
                if !s.is_zero() {
                    roots.push(Quadratic::rational((-c1.clone() - s) / two_a));
                }
                return Ok(roots);
            }
            let (f, core) = split_square(radicand);
            let a = -c1.clone() / two_a.clone();
            let b = BigRational::new(f, disc.denom().clone()) / two_a;
            let d = BigRational::from_integer(core);
            Ok(vec![Quadratic::new(a.clone(), b.clone(), d.clone()), Quadratic::new(a, -b, d)])
        }
        _ => Err(Error::domain("expected a linear or quadratic polynomial")),
    }
}

/// `r = f²·c` with small square factors moved into `f`.
fn split_square(mut r: BigInt) -> (BigInt, BigInt) {
    let mut f = BigInt::one();
    let mut k = BigInt::from(2);
    let limit = BigInt::from(1u64 << 20);
    while &k * &k <= r && k < limit {
        let sq = &k * &k;
        while (&r % &sq).is_zero() {
            r /= &sq;
            f *= &k;
        }
        k += 1;
    }
    (f, r)
}

/// The block matrix with `x` the first root of [`governing_equation`],
/// verified to satisfy the trace condition.
pub fn build_e(m: usize) -> Result<FiberMatrix> {
    let roots = solve_quadratic(&governing_equation(m)?)?;
    let x = roots.into_iter().next().ok_or_else(|| Error::internal("no root"))?;
    let e = FiberMatrix::block_ansatz(m, x)?;
    let tr = trace_condition(&e)?;
    if tr != Quadratic::rational(rat(-2)) {
        return Err(Error::internal(format!("tr(E^T E^-1) = {tr}, expected -2")));
    }
    Ok(e)
}

/// `tr(Eᵀ E⁻¹)`.
pub fn trace_condition(e: &FiberMatrix) -> Result<QuadraticRational> {
    let inv = e.inverse()?;
    Ok(diagonal_trace(&e.entries, &inv, 0..e.m))
}

/// `q·tr(Eᵀ E⁻¹) + 1 + q²`, which vanishes iff the quantum condition holds.
pub fn quantum_trace_condition(e: &FiberMatrix, q: &QuadraticRational) -> Result<QuadraticRational> {
    if q.is_zero() {
        return Err(Error::domain("q must be nonzero"));
    }
    let tr = trace_condition(e)?;
    Ok(q.clone() * tr + Quadratic::one() + q.clone() * q.clone())
}
