//! Growth-rate estimates: Stirling sandwich bounds, the Steinberg
//! multiplicity estimate `a(n)`, the `D_n` bound, and log-log regressions
//! for the exponent `δ` in `b_n ≈ 2^n n^{-δ}`.
//!
//! Everything is computed in log space in double precision; exact integer
//! versions exist where they stay affordable and gate the small-`n` tests.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use statrs::function::gamma::ln_gamma;

use crate::combinatorics::{factorial, is_prime, steinberg_parts, MixedCharacteristic};
use crate::decomposer::{binomial, GrowthSeries};
use crate::error::{Error, Result};
use crate::numeric::{fit_line, ln_biguint};
use crate::sl2_tilting::tilting_dimension;

/// `√(2πa)(a/e)^a e^{1/(12a+1)} < a! < √(2πa)(a/e)^a e^{1/(12a)}`, as logs.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StirlingBounds {
    pub ln_lower: f64,
    pub ln_upper: f64,
}

impl StirlingBounds {
    pub fn lower(&self) -> f64 {
        self.ln_lower.exp()
    }

    pub fn upper(&self) -> f64 {
        self.ln_upper.exp()
    }
}

fn ln_stirling_main(a: f64) -> f64 {
    0.5 * (2.0 * std::f64::consts::PI * a).ln() + a * (a.ln() - 1.0)
}

pub fn stirling_bounds(a: u64) -> Result<StirlingBounds> {
    if a == 0 {
        return Err(Error::domain("Stirling bounds need a >= 1"));
    }
    let x = a as f64;
    let main = ln_stirling_main(x);
    Ok(StirlingBounds { ln_lower: main + 1.0 / (12.0 * x + 1.0), ln_upper: main + 1.0 / (12.0 * x) })
}

/// `⌊log_p √n⌋`: the largest `r` with `p^{2r} ≤ n`.
pub fn r_of_n(n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::domain("r(n) needs n >= 1"));
    }
    if p < 2 {
        return Err(Error::domain(format!("r(n) needs p >= 2, got {p}")));
    }
    let mut r = 0;
    let mut sq = p as u128 * p as u128;
    while sq <= n as u128 {
        r += 1;
        sq *= p as u128 * p as u128;
    }
    Ok(r)
}

/// Row lengths `x_i = n/M + (p^{r(n)} − 1)ρ_i`.
pub fn steinberg_rows(n: u64, m: usize, p: u64) -> Result<Vec<u64>> {
    steinberg_parts(n, m, p, r_of_n(n, p)?)
}

/// `ln x!` via the log-gamma function.
pub fn ln_factorial(x: u64) -> f64 {
    ln_gamma(x as f64 + 1.0)
}

/// `ln a(n)`, where `a(n) = n! / Π x_i!` counts the copies of
/// `St_{r(n)} ⊗ (twisted factor)` forced into `V^{⊗n}`.
pub fn steinberg_count_estimate(n: u64, m: usize, p: u64) -> Result<f64> {
    steinberg_count_estimate_at(n, m, p, r_of_n(n, p)?)
}

/// As [`steinberg_count_estimate`] with an explicit Steinberg level `r`.
pub fn steinberg_count_estimate_at(n: u64, m: usize, p: u64, r: u32) -> Result<f64> {
    let rows = steinberg_parts(n, m, p, r)?;
    Ok(ln_factorial(n) - rows.iter().map(|&x| ln_factorial(x)).sum::<f64>())
}

/// `a(n)` as an exact multinomial coefficient.
pub fn steinberg_count_exact(n: u64, m: usize, p: u64) -> Result<BigUint> {
    steinberg_count_exact_at(n, m, p, r_of_n(n, p)?)
}

pub fn steinberg_count_exact_at(n: u64, m: usize, p: u64, r: u32) -> Result<BigUint> {
    let rows = steinberg_parts(n, m, p, r)?;
    let den: BigUint = rows.iter().map(|&x| factorial(x as usize)).product();
    Ok(factorial(n as usize) / den)
}

/// Stirling applied to every factorial in `a(n)`: the main term and the two
/// correction exponents with
/// `main·e^{lower} < a(n) < main·e^{upper}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SteinbergSandwich {
    pub ln_main: f64,
    pub lower_exponent: f64,
    pub upper_exponent: f64,
}

impl SteinbergSandwich {
    pub fn ln_lower(&self) -> f64 {
        self.ln_main + self.lower_exponent
    }

    pub fn ln_upper(&self) -> f64 {
        self.ln_main + self.upper_exponent
    }
}

pub fn steinberg_sandwich(n: u64, m: usize, p: u64) -> Result<SteinbergSandwich> {
    let rows = steinberg_rows(n, m, p)?;
    if n == 0 || rows.contains(&0) {
        return Err(Error::domain("the sandwich needs every x_i >= 1"));
    }
    let nf = n as f64;
    let ln_main = ln_stirling_main(nf) - rows.iter().map(|&x| ln_stirling_main(x as f64)).sum::<f64>();
    let inv = |x: u64, shift: f64| 1.0 / (12.0 * x as f64 + shift);
    Ok(SteinbergSandwich {
        ln_main,
        lower_exponent: inv(n, 1.0) - rows.iter().map(|&x| inv(x, 0.0)).sum::<f64>(),
        upper_exponent: inv(n, 0.0) - rows.iter().map(|&x| inv(x, 1.0)).sum::<f64>(),
    })
}

/// `A = C(M, (M−1)/2)`, the largest dimension of a fundamental `GL_M`-module.
pub fn central_binomial(m: usize) -> Result<BigUint> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::domain(format!("the D_n bound needs M odd and >= 3, got {m}")));
    }
    Ok(binomial(m as u64, (m as u64 - 1) / 2))
}

/// `ln(p^r · A^{n/p^r})` with `r = r(n)`.
pub fn dn_bound(n: u64, m: usize, p: u64) -> Result<f64> {
    let a = central_binomial(m)?;
    if !is_prime(p) {
        return Err(Error::domain(format!("p must be prime, got {p}")));
    }
    let r = r_of_n(n, p)?;
    let pr = (p as f64).powi(r as i32);
    Ok(pr.ln() + n as f64 / pr * ln_biguint(&a))
}

/// `f(s) = s − 1 + log₂(1 + 2^s)`.
pub fn f_exponent(s: f64) -> f64 {
    s - 1.0 + (1.0 + s.exp2()).log2()
}

/// A least-squares line in log-log coordinates, with the sample range.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RegressionFit {
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square residual.
    pub residual: f64,
    pub first: u64,
    pub last: u64,
    pub points: usize,
}

impl RegressionFit {
    fn from_samples(ns: &[u64], ys: &[f64]) -> Result<Self> {
        let xs: Vec<f64> = ns.iter().map(|&n| (n as f64).ln()).collect();
        let line = fit_line(&xs, ys)?;
        Ok(Self {
            slope: line.slope,
            intercept: line.intercept,
            residual: line.residual,
            first: ns[0],
            last: ns[ns.len() - 1],
            points: line.points,
        })
    }

    /// `−slope`, the exponent estimate for `b_n ≈ c·d^n·n^{−δ}`.
    pub fn delta(&self) -> f64 {
        -self.slope
    }
}

fn ln_rational(x: &BigRational) -> f64 {
    ln_biguint(x.numer().magnitude()) - ln_biguint(x.denom().magnitude())
}

/// `E[(dim T(m))^s]` for `m` uniform in `[n/2, n−1]`, characteristic `p`.
/// Integer `s` is averaged exactly over the rationals.
pub fn moment_average(s: f64, p: u64, n: u64) -> Result<f64> {
    Ok(ln_moment_average(s, p, n)?.exp())
}

fn ln_moment_average(s: f64, p: u64, n: u64) -> Result<f64> {
    let mc = MixedCharacteristic::classical(p)?;
    if n < 2 {
        return Err(Error::domain(format!("the range [n/2, n-1] is empty for n={n}")));
    }
    let range = n / 2..n;
    let count = (range.end - range.start) as f64;
    if s.fract() == 0.0 && s.abs() <= 64.0 {
        let k = s as i32;
        let mut sum = BigRational::zero();
        for m in range.clone() {
            let d = BigRational::from_integer(tilting_dimension(m, mc)?.into());
            sum += if k >= 0 { num_traits::pow(d, k as usize) } else { num_traits::pow(d.recip(), (-k) as usize) };
        }
        return Ok(ln_rational(&sum) - count.ln());
    }
    let mut sum = 0.0;
    for m in range {
        sum += (tilting_dimension(m, mc)? as f64).powf(s);
    }
    Ok((sum / count).ln())
}

/// Slope of `ln E[(dim T(m))^s]` against `ln n`; approximates `f(s)`.
pub fn moment_scaling_fit(s: f64, p: u64, n_grid: &[u64]) -> Result<RegressionFit> {
    if n_grid.len() < 3 {
        return Err(Error::domain(format!("moment fit needs at least 3 grid points, got {}", n_grid.len())));
    }
    if n_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("n_grid must be strictly increasing"));
    }
    if n_grid[0] < 16 {
        return Err(Error::domain(format!("n_grid entries must be >= 16, got {}", n_grid[0])));
    }
    let ys: Vec<f64> = n_grid.par_iter().map(|&n| ln_moment_average(s, p, n)).collect::<Result<_>>()?;
    RegressionFit::from_samples(n_grid, &ys)
}

/// Which indices of a series enter the δ regression.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FitWindow {
    /// `[N/2, N]`.
    TrailingHalf,
    /// `[N/b², N]`: whole periods of a modulation periodic in `log_b n`.
    Periodic(u64),
    /// `Periodic(min(p, ℓ))` for a finite base, `TrailingHalf` otherwise.
    #[default]
    Auto,
}

impl FitWindow {
    pub fn resolve(self, mc: MixedCharacteristic) -> FitWindow {
        match self {
            FitWindow::Auto => match mc.smallest_base().finite() {
                Some(b) => FitWindow::Periodic(b),
                None => FitWindow::TrailingHalf,
            },
            w => w,
        }
    }

    /// First index of the window for a series ending at `last`.
    pub fn start(self, last: u64, mc: MixedCharacteristic) -> u64 {
        match self.resolve(mc) {
            FitWindow::Periodic(b) if b >= 2 => (last / (b * b)).max(1),
            _ => (last / 2).max(1),
        }
    }
}

/// Minimum series length accepted by [`delta_estimate`].
pub const MIN_DELTA_POINTS: usize = 8;

/// Fits `ln(b_n / d^n) ≈ c − δ ln n` with the default window.
pub fn delta_estimate(series: &GrowthSeries, dim_v: usize) -> Result<RegressionFit> {
    delta_estimate_with(series, dim_v, FitWindow::Auto)
}

pub fn delta_estimate_with(series: &GrowthSeries, dim_v: usize, window: FitWindow) -> Result<RegressionFit> {
    if series.len() < MIN_DELTA_POINTS {
        return Err(Error::domain(format!("delta fit needs at least {MIN_DELTA_POINTS} points, got {}", series.len())));
    }
    if dim_v < 2 {
        return Err(Error::domain(format!("delta fit needs dim V >= 2, got {dim_v}")));
    }
    let last = series.len() as u64 - 1;
    let start = window.start(last, series.mc);
    let ln_d = (dim_v as f64).ln();
    let ns: Vec<u64> = (start..=last).collect();
    let mut ys = Vec::with_capacity(ns.len());
    for &n in &ns {
        let b = &series.values[n as usize];
        if b.is_zero() {
            return Err(Error::domain(format!("b_{n} is zero")));
        }
        ys.push(ln_biguint(b) - n as f64 * ln_d);
    }
    RegressionFit::from_samples(&ns, &ys)
}

/// The conjectured `δ(p)` for `p = 2, 3`: `½ log_p` of the inverse mean
/// digit factor, i.e. `½log₂(8/3)` and `½log₃(9/2)`.
pub fn predicted_delta(p: u64) -> Option<f64> {
    match p {
        2 => Some(0.5 * (8.0f64 / 3.0).log2()),
        3 => Some(0.5 * (4.5f64).ln() / 3f64.ln()),
        _ => None,
    }
}

/// `b_n ~ √(2/π) 2^n / √n` for `V₂` in characteristic 0.
pub fn clt_constant() -> f64 {
    (2.0 / std::f64::consts::PI).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::steinberg_partition;
    use crate::decomposer::{b_sequence_sl2, Family};
    use num_traits::One;

    fn powers_of_two() -> Vec<u64> {
        (4..=14).map(|e| 1u64 << e).collect()
    }

    #[test]
    fn stirling_brackets_factorials() {
        for a in 1..=500u64 {
            let b = stirling_bounds(a).unwrap();
            let exact = ln_biguint(&factorial(a as usize));
            assert!(b.ln_lower < exact + 1e-12, "a={a}");
            assert!(exact < b.ln_upper + 1e-12, "a={a}");
            assert!(b.ln_lower < b.ln_upper);
        }
        let one = stirling_bounds(1).unwrap();
        assert!(one.lower() < 1.0 && 1.0 < one.upper());
        let ten = stirling_bounds(10).unwrap();
        assert!(ten.lower() < 3628800.0 && 3628800.0 < ten.upper());
        let big = stirling_bounds(1_000_000).unwrap();
        assert!((big.ln_upper - big.ln_lower).exp() - 1.0 < 1e-6);
        assert!(stirling_bounds(0).is_err());
    }

    #[test]
    fn r_examples() {
        assert_eq!(r_of_n(16, 2).unwrap(), 2);
        assert_eq!(r_of_n(12, 2).unwrap(), 1);
        assert_eq!(r_of_n(81, 3).unwrap(), 2);
        assert_eq!(r_of_n(80, 3).unwrap(), 1);
        assert_eq!(r_of_n(1, 5).unwrap(), 0);
        for n in 1..5000u64 {
            let r = r_of_n(n, 2).unwrap();
            let pr = 2f64.powi(r as i32);
            assert!(pr <= (n as f64).sqrt() && 2.0 * pr > (n as f64).sqrt(), "n={n}");
        }
        assert!(r_of_n(0, 2).is_err());
    }

    #[test]
    fn steinberg_partition_instance() {
        assert_eq!(steinberg_partition(12, 3, 2, 2).unwrap().parts(), &[7, 4, 1]);
        let want = factorial(12) / (factorial(7) * factorial(4) * factorial(1));
        assert_eq!(want, BigUint::from(3960u32));
        assert_eq!(steinberg_count_exact_at(12, 3, 2, 2).unwrap(), want);
        let est = steinberg_count_estimate_at(12, 3, 2, 2).unwrap();
        assert!((est - 3960f64.ln()).abs() / 3960f64.ln() < 1e-9);
        // With r = r(12) = 1 the rows are (5, 4, 3).
        assert_eq!(steinberg_rows(12, 3, 2).unwrap(), vec![5, 4, 3]);
        assert_eq!(steinberg_count_exact(12, 3, 2).unwrap(), BigUint::from(27720u32));
    }

    #[test]
    fn log_formula_matches_exact_multinomials() {
        for p in [2, 3] {
            for n in (3..=300u64).step_by(3) {
                let Ok(exact) = steinberg_count_exact(n, 3, p) else { continue };
                let est = steinberg_count_estimate(n, 3, p).unwrap();
                let want = ln_biguint(&exact);
                let err = if want == 0.0 { est.abs() } else { (est - want).abs() / want.abs() };
                assert!(err < 1e-9, "n={n} p={p}: {est} vs {want}");
            }
        }
    }

    #[test]
    fn steinberg_preconditions() {
        assert!(matches!(steinberg_count_estimate(12, 4, 2), Err(Error::Domain(_))));
        assert!(steinberg_count_estimate(13, 3, 2).is_err());
        assert!(steinberg_count_estimate(12, 3, 4).is_err());
        let ones = steinberg_count_exact(7, 1, 2).unwrap();
        assert!(ones.is_one());
    }

    #[test]
    fn nth_root_of_a_approaches_m() {
        let n = 300_000;
        let root = (steinberg_count_estimate(n, 3, 2).unwrap() / n as f64).exp();
        assert!((root - 3.0).abs() / 3.0 < 0.05, "{root}");
    }

    #[test]
    fn sandwich_brackets_and_tightens() {
        for n in (6..=300u64).step_by(3) {
            let s = steinberg_sandwich(n, 3, 2).unwrap();
            let exact = ln_biguint(&steinberg_count_exact(n, 3, 2).unwrap());
            assert!(s.ln_lower() < exact + 1e-9 && exact < s.ln_upper() + 1e-9, "n={n}");
        }
        for n in [100_002u64, 300_000, 1_200_000] {
            let s = steinberg_sandwich(n, 3, 2).unwrap();
            assert!(s.lower_exponent.abs() < 1e-3 && s.upper_exponent.abs() < 1e-3, "n={n}");
        }
    }

    #[test]
    fn dn_bound_examples() {
        assert_eq!(central_binomial(3).unwrap(), BigUint::from(3u32));
        assert_eq!(central_binomial(5).unwrap(), BigUint::from(10u32));
        assert!(central_binomial(4).is_err());
        let ln = dn_bound(64, 3, 2).unwrap();
        assert!((ln - (8f64.ln() + 8.0 * 3f64.ln())).abs() < 1e-12);
        let root = (dn_bound(1_000_000, 3, 2).unwrap() / 1e6).exp();
        assert!(root < 1.05, "{root}");
        let roots: Vec<f64> =
            [1e3, 1e4, 1e5, 1e6, 1e7].iter().map(|&n| dn_bound(n as u64, 3, 2).unwrap() / n).collect();
        assert!(roots.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_exponent(0.0), 0.0);
        assert!((f_exponent(-1.0) + (8.0f64 / 3.0).log2()).abs() < 1e-15);
        assert!((f_exponent(1.0) - 3f64.log2()).abs() < 1e-15);
    }

    #[test]
    fn moment_slopes_track_f() {
        let grid = powers_of_two();
        for s in [-1.0, 0.0, 1.0] {
            let fit = moment_scaling_fit(s, 2, &grid).unwrap();
            assert!((fit.slope - f_exponent(s)).abs() < 0.05, "s={s}: {}", fit.slope);
        }
        assert_eq!(moment_scaling_fit(0.0, 2, &grid).unwrap().slope, 0.0);
        // Non-integer s goes through floating point.
        let half = moment_scaling_fit(0.5, 2, &grid).unwrap();
        assert!((half.slope - f_exponent(0.5)).abs() < 0.05);
    }

    #[test]
    fn moment_fit_rejects_bad_grids() {
        assert!(moment_scaling_fit(1.0, 2, &[16, 32]).is_err());
        assert!(moment_scaling_fit(1.0, 2, &[16, 64, 32]).is_err());
        assert!(moment_scaling_fit(1.0, 2, &[8, 16, 32]).is_err());
        assert!(moment_scaling_fit(1.0, 4, &[16, 32, 64]).is_err());
    }

    #[test]
    fn exact_moment_averages() {
        let dims: Vec<u128> =
            (8..16).map(|m| tilting_dimension(m, MixedCharacteristic::classical(2).unwrap()).unwrap()).collect();
        let mean = dims.iter().sum::<u128>() as f64 / 8.0;
        assert!((moment_average(1.0, 2, 16).unwrap() - mean).abs() < 1e-12);
        assert_eq!(moment_average(0.0, 2, 16).unwrap(), 1.0);
    }

    #[test]
    fn delta_char_zero() {
        let s = b_sequence_sl2(1000, MixedCharacteristic::char_zero()).unwrap();
        let fit = delta_estimate(&s, 2).unwrap();
        assert_eq!((fit.first, fit.last), (500, 1000));
        assert!((fit.delta() - 0.5).abs() < 0.03, "{}", fit.delta());
        // The intercept approaches ln √(2/π).
        assert!((fit.intercept - clt_constant().ln()).abs() < 0.05);
    }

    #[test]
    fn delta_char_zero_converges_monotonically() {
        let s = b_sequence_sl2(1600, MixedCharacteristic::char_zero()).unwrap();
        let errs: Vec<f64> = [100usize, 200, 400, 800, 1600]
            .iter()
            .map(|&n| {
                let cut = GrowthSeries::new(Family::Sl2, s.mc, 2, 0, s.values[..=n].to_vec());
                (delta_estimate(&cut, 2).unwrap().delta() - 0.5).abs()
            })
            .collect();
        assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
    }

    #[test]
    fn delta_windows() {
        let mc = MixedCharacteristic::classical(3).unwrap();
        assert_eq!(FitWindow::Auto.resolve(mc), FitWindow::Periodic(3));
        assert_eq!(FitWindow::Auto.start(1024, mc), 113);
        assert_eq!(FitWindow::TrailingHalf.start(1024, mc), 512);
        assert_eq!(FitWindow::Auto.resolve(MixedCharacteristic::char_zero()), FitWindow::TrailingHalf);
        let short = GrowthSeries::new(Family::Sl2, mc, 2, 0, vec![BigUint::one(); 7]);
        assert!(matches!(delta_estimate(&short, 2), Err(Error::Domain(_))));
        let ok = GrowthSeries::new(Family::Sl2, mc, 2, 0, vec![BigUint::one(); 8]);
        assert!(delta_estimate(&ok, 1).is_err());
    }

    #[test]
    fn predicted_values() {
        assert!((predicted_delta(2).unwrap() - 0.70752).abs() < 1e-5);
        assert!((predicted_delta(3).unwrap() - 0.68453).abs() < 1e-5);
        assert_eq!(predicted_delta(5), None);
        // Half of −f(−1) is the p = 2 prediction.
        assert!((predicted_delta(2).unwrap() + f_exponent(-1.0) / 2.0).abs() < 1e-15);
    }
}
