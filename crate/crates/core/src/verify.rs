//! The acceptance suite as library code, shared by `tensor-growth verify`
//! and the `acceptance` test target.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};

use crate::asymptotics::{
    delta_estimate, dn_bound, f_exponent, moment_scaling_fit, predicted_delta, steinberg_count_estimate,
    steinberg_count_estimate_at, steinberg_count_exact, steinberg_count_exact_at,
};
use crate::combinatorics::{c_matrix, factorial, kappa_partition, ExtNat, MixedCharacteristic};
use crate::decomposer::{
    b_closed_form_sl2_char0, b_sequence_sl2, decompose_tensor_power, decompose_tensor_power_cached,
    restriction_inequality_check,
};
use crate::error::{Error, Result};
use crate::hopf::{build_e, quantum_trace_condition, trace_condition, QuadraticRational};
use crate::numeric::ln_biguint;
use crate::report::{bn_table, Format};
use crate::sl2_tilting::{alpha_exponent, dimension_bound, tilting_dimension, TiltingCache};
use crate::specht::SpechtOracle;

pub const CRITERIA: usize = 12;

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub number: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} [{}] {}: {} ({:.2}s",
            self.number,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(b) = self.budget {
            write!(f, ", budget {}s", b.as_secs())?;
        }
        f.write_str(")")
    }
}

fn grid_values() -> [ExtNat; 5] {
    [ExtNat::Finite(2), ExtNat::Finite(3), ExtNat::Finite(5), ExtNat::Finite(7), ExtNat::Infinite]
}

fn regime_grid() -> Result<Vec<MixedCharacteristic>> {
    let vals = grid_values();
    let mut out = Vec::new();
    for &p in &vals {
        for &l in &vals {
            out.push(MixedCharacteristic::new(p, l)?);
        }
    }
    Ok(out)
}

fn mc(p: ExtNat, l: ExtNat) -> Result<MixedCharacteristic> {
    MixedCharacteristic::new(p, l)
}

type Check = Result<(bool, String)>;

fn golden_sequence() -> Check {
    let want: Vec<BigUint> = [1u32, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252].iter().map(|&x| x.into()).collect();
    let got = b_sequence_sl2(10, MixedCharacteristic::char_zero())?.values;
    let shown: Vec<String> = got.iter().map(ToString::to_string).collect();
    Ok((got == want, format!("b_0..b_10 = {}", shown.join(","))))
}

fn long_run_root() -> Check {
    let series = b_sequence_sl2(1000, MixedCharacteristic::char_zero())?;
    let exact = b_closed_form_sl2_char0(1000);
    let root = (ln_biguint(&exact) / 1000.0).exp();
    let ok = series.values[1000] == exact && (1.99255..=1.99275).contains(&root);
    Ok((ok, format!("b_1000^(1/1000) = {root:.6}, series equals C(1000,500): {}", series.values[1000] == exact)))
}

fn tilting_table() -> Check {
    use ExtNat::{Finite as F, Infinite as Inf};
    let mut cases = vec![(mc(F(2), F(2))?, 256u128), (mc(F(2), F(3))?, 192), (mc(Inf, F(3))?, 102)];
    for p in [2, 3, 5, 7] {
        cases.push((mc(F(p), Inf)?, 53));
    }
    let mut bad = Vec::new();
    for (m, want) in &cases {
        let got = tilting_dimension(52, *m)?;
        if got != *want {
            bad.push(format!("{m}: {got} != {want}"));
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { "dim T(52) = 256, 192, 102, 53".into() } else { bad.join("; ") }))
}

fn conservation() -> Check {
    let cache = TiltingCache::new();
    let grid = regime_grid()?;
    for m in &grid {
        for n in 0..=40u32 {
            let d = decompose_tensor_power_cached(n, *m, &cache)?;
            if d.total_dimension()? != BigUint::one() << n {
                return Ok((false, format!("n={n} {m}: dimensions do not sum to 2^n")));
            }
        }
    }
    Ok((true, format!("n <= 40 over {} regimes, residuals zero", grid.len())))
}

fn oracle_equivalence() -> Check {
    let oracle = SpechtOracle::default();
    let mut bad = Vec::new();
    for p in [2u64, 3, 5] {
        let mc = MixedCharacteristic::classical(p)?;
        for n in 0..=10u32 {
            let via_tilting = decompose_tensor_power(n, mc)?.b;
            let via_specht = oracle.b_modular_glm(n as usize, 2, p)?;
            if via_tilting != via_specht {
                bad.push(format!("p={p} n={n}: {via_tilting} vs {via_specht}"));
            }
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { "n <= 10, p in {2,3,5} agree".into() } else { bad.join("; ") }))
}

fn bound_suite() -> Check {
    let grid = regime_grid()?;
    for m in &grid {
        let s = b_sequence_sl2(40, *m)?;
        let alpha = alpha_exponent(*m);
        for (n, b) in s.values.iter().enumerate() {
            let b = b.to_f64().ok_or_else(|| Error::internal("b_n overflows f64"))?;
            let two_n = 2f64.powi(n as i32);
            let lower = two_n / ((n + 1) as f64).powf(alpha);
            if lower > b * (1.0 + 1e-12) || b > two_n {
                return Ok((false, format!("n={n} {m}: b_n={b} outside [{lower}, {two_n}]")));
            }
        }
        for k in 0..=5000u64 {
            let d = tilting_dimension(k, *m)? as f64;
            if d > dimension_bound(k, *m) * (1.0 + 1e-12) {
                return Ok((false, format!("dim T({k}) = {d} exceeds (m+1)^alpha in {m}")));
            }
        }
    }
    for m in 1..=3 {
        for n in 0..=20 {
            if !restriction_inequality_check(n, m)? {
                return Ok((false, format!("restriction inequality fails at n={n} M={m}")));
            }
        }
    }
    Ok((true, "b_n sandwich (n <= 40), dim T(m) <= (m+1)^alpha (m <= 5000), restriction (n <= 20, M <= 3)".into()))
}

fn kappa_identities() -> Check {
    for m in 1..=4 {
        for n in 1..=4 {
            for p in [2u64, 3, 5, 7] {
                let k = kappa_partition(m, n, p)?;
                if !k.kappa.is_p_core(p) {
                    return Ok((false, format!("kappa {} is not a {p}-core (M={m}, N={n})", k.kappa)));
                }
                let c = c_matrix(&k.alpha, &k.nu, m, n)?;
                for i in 1..=m {
                    for j in 1..=n {
                        if c[i - 1][j - 1] != (m + n - i - j) as i64 * p as i64 + 1 {
                            return Ok((false, format!("c_{i}{j} wrong at M={m} N={n} p={p}")));
                        }
                    }
                }
            }
        }
    }
    Ok((true, "M, N <= 4, p in {2,3,5,7}".into()))
}

fn delta_experiments() -> Check {
    use ExtNat::Finite as F;
    let zero = delta_estimate(&b_sequence_sl2(1000, MixedCharacteristic::char_zero())?, 2)?;
    let two = delta_estimate(&b_sequence_sl2(1024, mc(F(2), F(2))?)?, 2)?;
    let three = delta_estimate(&b_sequence_sl2(1024, mc(F(3), F(3))?)?, 2)?;
    let pred2 = predicted_delta(2).expect("p = 2 has a prediction");
    let pred3 = predicted_delta(3).expect("p = 3 has a prediction");
    let ok0 = (zero.delta() - 0.5).abs() <= 0.03;
    let ok2 = (0.65..=0.78).contains(&two.delta()) && (pred2 - two.delta()).abs() <= 2.0 * two.residual;
    let ok3 = (three.delta() - pred3).abs() <= 0.05;
    Ok((
        ok0 && ok2 && ok3,
        format!(
            "char 0: {:.4} on [{}, {}]; (2,2): {:.4} +- {:.4} on [{}, {}] vs {:.4}; (3,3): {:.4} on [{}, {}] vs {:.4}",
            zero.delta(),
            zero.first,
            zero.last,
            two.delta(),
            2.0 * two.residual,
            two.first,
            two.last,
            pred2,
            three.delta(),
            three.first,
            three.last,
            pred3
        ),
    ))
}

fn moment_regression() -> Check {
    let grid: Vec<u64> = (4..=14).map(|e| 1u64 << e).collect();
    let mut ok = true;
    let mut parts = Vec::new();
    for s in [-1.0, 0.0, 1.0] {
        let fit = moment_scaling_fit(s, 2, &grid)?;
        let target = f_exponent(s);
        ok &= (fit.slope - target).abs() <= 0.05;
        parts.push(format!("s={s}: {:.4} vs {:.4}", fit.slope, target));
    }
    Ok((ok, parts.join("; ")))
}

fn steinberg_asymptotics() -> Check {
    let instance = steinberg_count_exact_at(12, 3, 2, 2)?;
    let want = factorial(12) / (factorial(7) * factorial(4) * factorial(1));
    let mut ok = instance == want;
    let inst_log = steinberg_count_estimate_at(12, 3, 2, 2)?;
    ok &= (inst_log - ln_biguint(&want)).abs() <= 1e-9 * ln_biguint(&want);
    let mut worst = 0.0f64;
    for p in [2u64, 3] {
        for n in (3..=300u64).step_by(3) {
            let Ok(exact) = steinberg_count_exact(n, 3, p) else { continue };
            let est = steinberg_count_estimate(n, 3, p)?;
            let e = ln_biguint(&exact);
            let rel = if e == 0.0 { est.abs() } else { (est - e).abs() / e };
            worst = worst.max(rel);
        }
    }
    ok &= worst <= 1e-9;
    let root_a = (steinberg_count_estimate(300_000, 3, 2)? / 300_000.0).exp();
    ok &= (root_a - 3.0).abs() <= 0.05 * 3.0;
    let root_d = (dn_bound(1_000_000, 3, 2)? / 1e6).exp();
    ok &= root_d < 1.05;
    Ok((
        ok,
        format!(
            "12!/(7!4!1!) = {instance}; worst log error {worst:.2e}; a(3e5)^(1/n) = {root_a:.4}; D_1e6^(1/n) = {root_d:.4}"
        ),
    ))
}

fn counterexample() -> Check {
    let minus_two = QuadraticRational::rational(BigInt::from(-2).into());
    let one = QuadraticRational::rational(BigInt::from(1).into());
    for m in 2..=12 {
        let e = build_e(m)?;
        if trace_condition(&e)? != minus_two {
            return Ok((false, format!("m={m}: trace is not -2")));
        }
        if !num_traits::Zero::is_zero(&quantum_trace_condition(&e, &one)?) {
            return Ok((false, format!("m={m}: quantum condition at q=1 does not vanish")));
        }
    }
    Ok((true, "tr(E^T E^-1) = -2 exactly for 2 <= m <= 12; q=1 condition vanishes".into()))
}

/// Renders `bn --nmax 200` tables inside 1- and 8-thread pools.
fn determinism() -> Check {
    let render = |threads: usize, m: MixedCharacteristic| -> Result<String> {
        let pool =
            rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| Error::resource(e.to_string()))?;
        pool.install(|| bn_table(&b_sequence_sl2(200, m)?).render(Format::Csv))
    };
    let regimes = [
        MixedCharacteristic::char_zero(),
        MixedCharacteristic::classical(2)?,
        mc(ExtNat::Finite(3), ExtNat::Finite(5))?,
    ];
    for m in regimes {
        if render(1, m)? != render(8, m)? {
            return Ok((false, format!("{m}: 1-thread and 8-thread output differ")));
        }
    }
    Ok((true, "bn --nmax 200 identical at 1 and 8 threads".into()))
}

type Runner = fn() -> Check;

const TABLE: [(&str, Runner, Option<u64>); CRITERIA] = [
    ("golden sequence", golden_sequence, Some(1)),
    ("long-run root", long_run_root, Some(10)),
    ("tilting dimensions at m=52", tilting_table, None),
    ("dimension conservation", conservation, Some(60)),
    ("oracle equivalence", oracle_equivalence, Some(120)),
    ("bound suite", bound_suite, None),
    ("kappa and c-matrix identities", kappa_identities, Some(1)),
    ("delta experiments", delta_experiments, Some(300)),
    ("moment regression", moment_regression, Some(120)),
    ("Steinberg asymptotics", steinberg_asymptotics, None),
    ("counterexample", counterexample, Some(1)),
    ("determinism", determinism, None),
];

/// Runs criterion `number` (1-based).
pub fn run_criterion(number: usize) -> Result<CriterionResult> {
    let (name, runner, budget) = *TABLE
        .get(number.wrapping_sub(1))
        .ok_or_else(|| Error::domain(format!("criteria are numbered 1..={CRITERIA}, got {number}")))?;
    let budget = budget.map(Duration::from_secs);
    let start = Instant::now();
    let outcome = runner();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail.push_str("; over time budget");
        }
    }
    Ok(CriterionResult { number, name, passed, detail, elapsed, budget })
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=CRITERIA).map(|n| run_criterion(n).expect("criterion number in range")).collect()
}
