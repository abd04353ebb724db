use tensor_growth::asymptotics::{
    delta_estimate_with, dn_bound, f_exponent, ln_factorial, moment_scaling_fit, predicted_delta, r_of_n,
    steinberg_count_estimate, steinberg_rows, steinberg_sandwich, stirling_bounds, FitWindow,
};
use tensor_growth::combinatorics::{mixed_digits, ExtNat, MixedCharacteristic, Regime as McRegime};
use tensor_growth::decomposer::{
    b_sequence_sl2, decompose_tensor_power, glm_series, super_series, Family, GrowthSeries,
};
use tensor_growth::hopf::{build_e, governing_equation, quantum_trace_condition, trace_condition};
use tensor_growth::report::{bn_table, decomposition_table, Cell, Table};
use tensor_growth::sl2_tilting::{tilting_character, tilting_dimension};
use tensor_growth::specht::{SpechtOracle, DEFAULT_SIZE_BOUND, SIZE_BOUND_ENV};
use tensor_growth::{Error, QuadraticRational, Result};

use crate::args::{AsymptoticsKind, FamilyArg, Regime};

fn regime(r: &Regime) -> Result<MixedCharacteristic> {
    MixedCharacteristic::new(r.p, r.ell)
}

fn oracle_from_env() -> Result<SpechtOracle> {
    let oracle = SpechtOracle::from_env()?;
    if oracle.size_bound > DEFAULT_SIZE_BOUND {
        eprintln!(
            "warning: {SIZE_BOUND_ENV}={} raises the Specht oracle bound; Gram matrices need (f^λ)² integers each",
            oracle.size_bound
        );
    }
    Ok(oracle)
}

fn joined<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn bn(family: FamilyArg, r: &Regime, m: usize, n_odd: usize, nmax: usize) -> Result<Table> {
    let mc = regime(r)?;
    let series = match family {
        FamilyArg::Sl2 => {
            if m != 2 || n_odd != 0 {
                return Err(Error::domain("--family sl2 uses the 2-dimensional V; drop --M and --N"));
            }
            b_sequence_sl2(nmax, mc)?
        }
        FamilyArg::Glm => {
            if n_odd != 0 {
                return Err(Error::domain("--family glm takes no --N; use --family super"));
            }
            if m == 0 {
                return Err(Error::domain("--family glm needs --M >= 1"));
            }
            let values = match mc.regime() {
                McRegime::Semisimple => glm_series(nmax, m)?,
                McRegime::Classical => {
                    let p = mc.p().finite().expect("classical regime has finite p");
                    let oracle = oracle_from_env()?;
                    (0..=nmax).map(|n| oracle.b_modular_glm(n, m, p)).collect::<Result<_>>()?
                }
                other => {
                    return Err(Error::domain(format!(
                        "--family glm supports ell = inf or p = ell, not the {other:?} regime {mc}"
                    )))
                }
            };
            GrowthSeries::new(Family::Glm, mc, m, 0, values)
        }
        FamilyArg::Super => {
            if !(mc.p().is_infinite() && mc.ell().is_infinite()) {
                return Err(Error::domain("--family super is only available for p = ell = inf"));
            }
            GrowthSeries::new(Family::Super, mc, m, n_odd, super_series(nmax, m, n_odd)?)
        }
    };
    Ok(bn_table(&series))
}

pub fn decompose(n: u32, r: &Regime) -> Result<Table> {
    decomposition_table(&decompose_tensor_power(n, regime(r)?)?)
}

pub fn tilting(m: u64, r: &Regime, with_character: bool) -> Result<Table> {
    let mc = regime(r)?;
    let mut columns = vec!["m", "p", "ell", "digits", "dim"];
    if with_character {
        columns.push("character");
    }
    let mut t = Table::new(columns);
    let mut row = vec![
        Cell::from(m),
        Cell::text(mc.p().to_string()),
        Cell::text(mc.ell().to_string()),
        Cell::text(joined(&mixed_digits(m + 1, mc)?)),
        Cell::from(tilting_dimension(m, mc)?),
    ];
    if with_character {
        row.push(Cell::text(tilting_character(m, mc)?.to_string()));
    }
    t.push(row)?;
    Ok(t)
}

pub fn oracle(n: usize, m: usize, p: u64) -> Result<Table> {
    if m == 0 {
        return Err(Error::domain("--M must be at least 1"));
    }
    let rows = oracle_from_env()?.simple_dimensions(n, m, p)?;
    let mut t = Table::new(["lambda", "f_lambda", "dim"]);
    let (mut f_total, mut dim_total) = (0usize, 0usize);
    for r in &rows {
        f_total += r.f_lambda;
        dim_total += r.dim;
        t.push(vec![Cell::text(r.shape.to_string()), Cell::from(r.f_lambda), Cell::from(r.dim)])?;
    }
    t.push(vec![Cell::text("total"), Cell::from(f_total), Cell::from(dim_total)])?;
    Ok(t)
}

fn ten(x: f64) -> Cell {
    Cell::Fixed(x, 10)
}

pub fn asymptotics(
    kind: AsymptoticsKind,
    ns: &[u64],
    m: usize,
    p: u64,
    s: &[f64],
    emin: u32,
    emax: u32,
) -> Result<Table> {
    match kind {
        AsymptoticsKind::Stirling => {
            let mut t = Table::new(["a", "ln_lower", "ln_factorial", "ln_upper"]);
            for &a in ns {
                let b = stirling_bounds(a)?;
                t.push(vec![Cell::from(a), ten(b.ln_lower), ten(ln_factorial(a)), ten(b.ln_upper)])?;
            }
            Ok(t)
        }
        AsymptoticsKind::Steinberg => {
            let mut t = Table::new([
                "n",
                "r",
                "rows",
                "ln_a",
                "a_root",
                "lower_exponent",
                "upper_exponent",
                "ln_dn_bound",
                "dn_root",
            ]);
            for &n in ns {
                let ln_a = steinberg_count_estimate(n, m, p)?;
                let sandwich = steinberg_sandwich(n, m, p).ok();
                let dn = if m >= 3 { Some(dn_bound(n, m, p)?) } else { None };
                t.push(vec![
                    Cell::from(n),
                    Cell::from(r_of_n(n, p)? as u64),
                    Cell::text(joined(&steinberg_rows(n, m, p)?)),
                    ten(ln_a),
                    Cell::six((ln_a / n as f64).exp()),
                    sandwich.map_or(Cell::Empty, |s| ten(s.lower_exponent)),
                    sandwich.map_or(Cell::Empty, |s| ten(s.upper_exponent)),
                    dn.map_or(Cell::Empty, ten),
                    dn.map_or(Cell::Empty, |d| Cell::six((d / n as f64).exp())),
                ])?;
            }
            Ok(t)
        }
        AsymptoticsKind::Moments => {
            if emin > emax || emax >= 63 {
                return Err(Error::domain(format!("need emin <= emax < 63, got {emin}, {emax}")));
            }
            let grid: Vec<u64> = (emin..=emax).map(|e| 1u64 << e).collect();
            let mut t = Table::new(["s", "p", "first", "last", "points", "slope", "f_s", "residual"]);
            for &si in s {
                let fit = moment_scaling_fit(si, p, &grid)?;
                t.push(vec![
                    Cell::six(si),
                    Cell::from(p),
                    Cell::from(fit.first),
                    Cell::from(fit.last),
                    Cell::from(fit.points),
                    Cell::six(fit.slope),
                    Cell::six(f_exponent(si)),
                    Cell::six(fit.residual),
                ])?;
            }
            Ok(t)
        }
    }
}

fn parse_window(s: &str) -> Result<FitWindow> {
    match s {
        "auto" => Ok(FitWindow::Auto),
        "half" => Ok(FitWindow::TrailingHalf),
        b => match b.parse::<u64>() {
            Ok(b) if b >= 2 => Ok(FitWindow::Periodic(b)),
            _ => Err(Error::domain(format!("--window must be auto, half or a base >= 2, got {s:?}"))),
        },
    }
}

/// `0.5` in characteristic 0; the conjectured value for classical `p = 2, 3`.
fn predicted(mc: MixedCharacteristic) -> Option<f64> {
    match (mc.p(), mc.ell()) {
        (ExtNat::Infinite, ExtNat::Infinite) => Some(0.5),
        (ExtNat::Finite(p), ExtNat::Finite(l)) if p == l => predicted_delta(p),
        _ => None,
    }
}

pub fn delta(r: &Regime, nmax: usize, window: &str, plot_series: bool) -> Result<Table> {
    let mc = regime(r)?;
    let window = parse_window(window)?;
    let series = b_sequence_sl2(nmax, mc)?;
    let fit = delta_estimate_with(&series, 2, window)?;
    if plot_series {
        let mut t = Table::new(["n", "log2_b_n_minus_n", "corrected"]);
        for (n, b) in series.values.iter().enumerate().skip(1) {
            let y = tensor_growth::numeric::ln_biguint(b) / std::f64::consts::LN_2 - n as f64;
            t.push(vec![Cell::from(n), ten(y), ten(y + fit.delta() * (n as f64).log2())])?;
        }
        return Ok(t);
    }
    let mut t =
        Table::new(["p", "ell", "nmax", "first", "last", "points", "delta", "residual", "intercept", "predicted"]);
    t.push(vec![
        Cell::text(mc.p().to_string()),
        Cell::text(mc.ell().to_string()),
        Cell::from(nmax),
        Cell::from(fit.first),
        Cell::from(fit.last),
        Cell::from(fit.points),
        Cell::six(fit.delta()),
        Cell::six(fit.residual),
        Cell::six(fit.intercept),
        predicted(mc).map_or(Cell::Empty, Cell::six),
    ])?;
    Ok(t)
}

fn polynomial(coeffs: &[num_rational::BigRational]) -> String {
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let var = match k {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{k}"),
        };
        let mag = num_traits::Signed::abs(c);
        let body = if var.is_empty() {
            mag.to_string()
        } else if num_traits::One::is_one(&mag) {
            var
        } else {
            format!("{mag}*{var}")
        };
        let neg = num_traits::Signed::is_negative(c);
        terms.push(match (terms.is_empty(), neg) {
            (true, false) => body,
            (true, true) => format!("-{body}"),
            (false, false) => format!("+ {body}"),
            (false, true) => format!("- {body}"),
        });
    }
    format!("{} = 0", terms.join(" "))
}

pub fn counterexample(m: usize) -> Result<Table> {
    let e = build_e(m)?;
    let x = e.x.clone().ok_or_else(|| Error::internal("E lacks its parameter"))?;
    let one = QuadraticRational::rational(num_rational::BigRational::from_integer(1.into()));
    let trace = trace_condition(&e)?;
    let quantum = quantum_trace_condition(&e, &one)?;
    let matrix = e
        .entries
        .iter()
        .map(|row| format!("[{}]", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .join(", ");
    let mut t = Table::new(["m", "x", "x_approx", "equation", "trace", "q1_residual", "E"]);
    t.push(vec![
        Cell::from(m),
        Cell::text(x.to_string()),
        x.to_f64().map_or(Cell::Empty, |v| Cell::Fixed(v, 12)),
        Cell::text(polynomial(&governing_equation(m)?)),
        Cell::text(trace.to_string()),
        Cell::text(quantum.to_string()),
        Cell::text(format!("[{matrix}]")),
    ])?;
    Ok(t)
}
