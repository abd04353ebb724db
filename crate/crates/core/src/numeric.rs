//! Floating-point helpers: logarithms of huge integers and ordinary least
//! squares on a line.

use num_bigint::BigUint;
use num_traits::{Float, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};

/// Natural log of a big integer, accurate to double precision.
/// Returns `-∞` for zero.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit prefix");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Least-squares line `y ≈ slope·x + intercept`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LineFit<T> {
    pub slope: T,
    pub intercept: T,
    /// Root-mean-square of the residuals.
    pub residual: T,
    pub points: usize,
}

pub fn fit_line<T: Float>(xs: &[T], ys: &[T]) -> Result<LineFit<T>> {
    if xs.len() != ys.len() {
        return Err(Error::domain("x and y samples differ in length"));
    }
    let n = xs.len();
    if n < 2 {
        return Err(Error::domain("a line fit needs at least two points"));
    }
    let count = T::from(n).expect("sample count representable");
    let mean_x = xs.iter().fold(T::zero(), |a, &x| a + x) / count;
    let mean_y = ys.iter().fold(T::zero(), |a, &y| a + y) / count;
    let (mut sxx, mut sxy) = (T::zero(), T::zero());
    for (&x, &y) in xs.iter().zip(ys) {
        sxx = sxx + (x - mean_x) * (x - mean_x);
        sxy = sxy + (x - mean_x) * (y - mean_y);
    }
    if sxx == T::zero() {
        return Err(Error::domain("x samples are all equal"));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let sq = xs.iter().zip(ys).fold(T::zero(), |acc, (&x, &y)| {
        let r = y - (slope * x + intercept);
        acc + r * r
    });
    Ok(LineFit { slope, intercept, residual: (sq / count).sqrt(), points: n })
}
