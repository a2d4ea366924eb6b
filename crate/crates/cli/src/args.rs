use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

#[derive(Debug, Parser)]
#[command(name = "ptsusy", version, about = "Spectra and supersymmetric partners of PT-symmetric tridiagonal Hamiltonians")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bound states of the radial Coulomb problem with imaginary charge.
    Coulomb(CoulombArgs),
    /// PT-symmetric Morse oscillator.
    #[command(subcommand)]
    Morse(MorseCommand),
    /// PT-symmetric Rosen-Morse II levels, potential and basis.
    #[command(subcommand)]
    Rm2(Rm2Command),
    /// Supersymmetric partner of an operator read from JSON.
    Partner(PartnerArgs),
    /// Orthogonal polynomial tables.
    #[command(subcommand)]
    Poly(PolyCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write here instead of stdout (atomically).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CoulombArgs {
    /// Magnitude of the imaginary charge.
    #[arg(long, allow_negative_numbers = true)]
    pub z: f64,
    #[arg(long, default_value_t = 0)]
    pub ell: usize,
    #[arg(long, default_value_t = 5)]
    pub mu_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Emit the bound-state profile of this level instead of the level table.
    #[arg(long)]
    pub profile_mu: Option<usize>,
    #[arg(long, default_value_t = 0.05)]
    pub r_min: f64,
    #[arg(long, default_value_t = 20.0)]
    pub r_max: f64,
    #[arg(long, default_value_t = 400)]
    pub r_steps: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct MorseModel {
    /// JSON file with `v0`, `alpha`, `gamma`; explicit flags override it.
    #[arg(long)]
    pub params: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    pub v0: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum MorseCommand {
    /// Laguerre-basis operator, closed-form partner and the factorization checks.
    Susy(MorseSusyArgs),
    /// Reality of the Hermite-basis spectrum over a range of basis scales.
    Scan(MorseScanArgs),
}

#[derive(Debug, Args)]
pub struct MorseSusyArgs {
    #[command(flatten)]
    pub model: MorseModel,
    /// Basis size.
    #[arg(long, default_value_t = 20)]
    pub n: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct MorseScanArgs {
    #[command(flatten)]
    pub model: MorseModel,
    #[arg(long, default_value_t = 1.0)]
    pub lambda_min: f64,
    #[arg(long, default_value_t = 15.0)]
    pub lambda_max: f64,
    /// Number of evenly spaced scales, endpoints included.
    #[arg(long, default_value_t = 57)]
    pub steps: usize,
    /// Basis size.
    #[arg(long, default_value_t = 70)]
    pub n: usize,
    /// Reality cutoff relative to the spectral radius.
    #[arg(long, default_value_t = 1e-8)]
    pub imag_tol: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct Rm2Model {
    /// JSON file with `a`, `b`, `delta` and optional `c`; explicit flags override it.
    #[arg(long)]
    pub params: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long)]
    pub delta: Option<f64>,
    /// Generalized cubic coefficient (0 for the standard potential).
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Exponents {
    Half,
    ShiftedAlpha,
    ShiftedBeta,
}

#[derive(Debug, Args)]
pub struct Grid {
    #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
    pub x_min: f64,
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub x_max: f64,
    #[arg(long, default_value_t = 201)]
    pub x_steps: usize,
}

#[derive(Debug, Subcommand)]
pub enum Rm2Command {
    /// Energies and Jacobi parameters for levels `0..=n-max`.
    Levels {
        #[command(flatten)]
        model: Rm2Model,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Potential on a grid.
    Potential {
        #[command(flatten)]
        model: Rm2Model,
        #[command(flatten)]
        grid: Grid,
        #[command(flatten)]
        output: Output,
    },
    /// Unnormalized basis function on a grid.
    Basis {
        #[command(flatten)]
        model: Rm2Model,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Exponents::Half)]
        exponents: Exponents,
        #[command(flatten)]
        grid: Grid,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GaugeArg {
    PaperConjugate,
    Doolittle,
}

#[derive(Debug, Args)]
pub struct PartnerArgs {
    /// Operator JSON (`diag`, `sub`, `sup`, `pseudo_symmetric`).
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = GaugeArg::PaperConjugate)]
    pub gauge: GaugeArg,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Subcommand)]
pub enum PolyCommand {
    /// Tabulate `P_0 .. P_{n-max}` at the given points.
    Eval(PolyEvalArgs),
}

#[derive(Debug, Args)]
pub struct PolyEvalArgs {
    #[command(subcommand)]
    pub family: Family,
}

/// Evaluation points, listed explicitly or drawn from a seeded generator.
#[derive(Debug, Args)]
pub struct Points {
    /// Highest degree.
    #[arg(long, default_value_t = 5)]
    pub n_max: usize,
    /// Point as `re` or `re,im`; repeatable.
    #[arg(long = "at", value_parser = parse_complex, allow_negative_numbers = true)]
    pub at: Vec<Complex64>,
    /// Also draw this many points uniformly from the unit box.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Physicists' Hermite `H_n(x)` (real points).
    Hermite {
        #[command(flatten)]
        points: Points,
    },
    /// Associated Laguerre `L_n^alpha(z)`.
    Laguerre {
        #[arg(long, value_parser = parse_complex, allow_negative_numbers = true)]
        alpha: Complex64,
        #[command(flatten)]
        points: Points,
    },
    /// Jacobi `P_n^{(mu,nu)}(y)`.
    Jacobi {
        #[arg(long, value_parser = parse_complex, allow_negative_numbers = true)]
        mu: Complex64,
        #[arg(long, value_parser = parse_complex, allow_negative_numbers = true)]
        nu: Complex64,
        #[command(flatten)]
        points: Points,
    },
    /// Continuous dual Hahn `S_n(x^2; a, b, c)`; points are `x^2`.
    Cdhahn {
        #[arg(long, value_parser = parse_complex, allow_negative_numbers = true)]
        a: Complex64,
        #[arg(long, value_parser = parse_complex, allow_negative_numbers = true)]
        b: Complex64,
        #[arg(long, value_parser = parse_complex, allow_negative_numbers = true)]
        c: Complex64,
        #[command(flatten)]
        points: Points,
    },
    /// Wilson `W_n(x^2; a, b, c, d)`; points are `x^2`.
    Wilson {
        #[arg(long, value_parser = parse_complex, allow_negative_numbers = true)]
        a: Complex64,
        #[arg(long, value_parser = parse_complex, allow_negative_numbers = true)]
        b: Complex64,
        #[arg(long, value_parser = parse_complex, allow_negative_numbers = true)]
        c: Complex64,
        #[arg(long, value_parser = parse_complex, allow_negative_numbers = true)]
        d: Complex64,
        #[command(flatten)]
        points: Points,
    },
    /// Closed-form Morse expansion coefficients; points are energies.
    Morse {
        #[command(flatten)]
        model: MorseModel,
        /// Use the partner family.
        #[arg(long)]
        partner: bool,
        #[command(flatten)]
        points: Points,
    },
    /// Recurrence polynomials of an operator read from JSON; points are energies.
    Operator {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        points: Points,
    },
}

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parse = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
    let value = match s.split_once(',') {
        Some((re, im)) => Complex64::new(parse(re)?, parse(im)?),
        None => Complex64::new(parse(s)?, 0.0),
    };
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}
