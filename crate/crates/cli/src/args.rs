use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tensor_growth::combinatorics::ExtNat;

#[derive(Debug, Parser)]
#[command(
    name = "tensor-growth",
    version,
    about = "Counts indecomposable summands b_n of tensor powers V^(⊗n) and estimates their growth"
)]
pub struct Cli {
    /// Worker threads (defaults to one per core). Output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,

    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Sl2,
    Glm,
    Super,
}

#[derive(Debug, Args)]
pub struct Regime {
    /// Characteristic of the ground field: a prime or `inf`.
    #[arg(long, default_value = "inf")]
    pub p: ExtNat,

    /// Order of q² (quantum parameter): at least 2, or `inf`.
    #[arg(long, default_value = "inf")]
    pub ell: ExtNat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summand counts b_n of V^(⊗n) for n = 0..=nmax, with b_n^(1/n).
    ///
    /// sl2: tilting decomposition for (quantum) SL₂ in mixed characteristic (p, ell).
    ///
    /// glm: GL_M via Schur–Weyl duality, exact for ell = inf, Specht oracle for p = ell.
    ///
    /// super: GL(M|N) hook partitions, characteristic 0 only.
    Bn {
        #[arg(long, value_enum, default_value_t = FamilyArg::Sl2)]
        family: FamilyArg,
        #[command(flatten)]
        regime: Regime,
        /// Rank M of GL_M, or even rank of GL(M|N).
        #[arg(long = "M", default_value_t = 2)]
        m: usize,
        /// Odd rank N of GL(M|N).
        #[arg(long = "N", default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
    },
    /// Multiplicities of the tilting modules T(m) in V^(⊗n) for SL₂: m, mult, dim T(m).
    Decompose {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        regime: Regime,
    },
    /// The SL₂ tilting module T(m): (p, ell)-adic digits of m+1, dimension, character.
    Tilting {
        #[arg(long)]
        m: u64,
        #[command(flatten)]
        regime: Regime,
        /// Include ch T(m) as a Laurent polynomial in v.
        #[arg(long)]
        character: bool,
    },
    /// Simple S_n-module dimensions dim D_λ as Gram ranks mod p, summed to b_n for GL_M.
    ///
    /// Brute force over Specht modules; |λ| is limited by TG_SIZE_BOUND (default 10).
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long = "M")]
        m: usize,
        #[arg(long)]
        p: u64,
    },
    /// Stirling sandwich, Steinberg multiplicity a(n) with the D_n bound, or tilting-dimension moments.
    Asymptotics {
        #[arg(long, value_enum, default_value_t = AsymptoticsKind::Steinberg)]
        kind: AsymptoticsKind,
        /// Values of n (steinberg) or of a (stirling).
        #[arg(long, value_delimiter = ',', default_values_t = vec![12u64, 300, 3000, 30000, 300000])]
        n: Vec<u64>,
        #[arg(long = "M", default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        p: u64,
        /// Moment exponents s for E[(dim T(m))^s].
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_values_t = vec![-1.0, 0.0, 1.0])]
        s: Vec<f64>,
        /// Moment grid n = 2^emin, …, 2^emax.
        #[arg(long, default_value_t = 4)]
        emin: u32,
        #[arg(long, default_value_t = 14)]
        emax: u32,
    },
    /// Exponent δ in b_n ≈ c·2^n·n^(-δ) for SL₂ by log-log regression, with the predicted value.
    Delta {
        #[command(flatten)]
        regime: Regime,
        #[arg(long, default_value_t = 1024)]
        nmax: usize,
        /// Fit window: auto, half, or a period base b for [nmax/b², nmax].
        #[arg(long, default_value = "auto")]
        window: String,
        /// Emit the plot series n, log₂ b_n − n + δ·log₂ n instead of the fit.
        #[arg(long)]
        series: bool,
    },
    /// Fiber-functor matrix E in GL_m with tr(Eᵀ E⁻¹) = −2 (β = 2 < m).
    Counterexample {
        #[arg(long)]
        m: usize,
    },
    /// Run the acceptance suite and print one pass/fail line per criterion.
    Verify {
        /// Run a single criterion (1-12).
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AsymptoticsKind {
    Stirling,
    Steinberg,
    Moments,
}
