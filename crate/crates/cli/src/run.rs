use std::path::Path;

use anyhow::{Context, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use ptsusy::models::{self, ExponentPair, MorseFamily};
use ptsusy::quadrature::reality_scan;
use ptsusy::specfun;
use ptsusy::susy::{partner_of, sigma_tau, Gauge};
use ptsusy::tridiag::{recurrence_eval, ComplexJson, OperatorJson};
use ptsusy::{Morse, Operator, RosenMorse};

use crate::args::*;
use crate::output::{emit, json, Csv, Field};

/// Bad user input; maps to exit code 2.
#[derive(Debug)]
pub struct Invalid(String);

impl std::fmt::Display for Invalid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Invalid {}

fn invalid(msg: impl Into<String>) -> anyhow::Error {
    Invalid(msg.into()).into()
}

pub fn exit_code(err: &anyhow::Error) -> u8 {
    use ptsusy::Error as E;
    for cause in err.chain() {
        if cause.is::<Invalid>() || cause.is::<serde_json::Error>() {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<E>() {
            return match e {
                E::InvalidParameter(_)
                | E::Json(_)
                | E::Shape(_)
                | E::NotPseudoSymmetric { .. }
                | E::OutOfRange { .. }
                | E::DegenerateParameters(_) => 2,
                _ => 1,
            };
        }
    }
    1
}

/// Runs a library call, tagging failures with the stage name.
fn stage<T>(name: &'static str, r: ptsusy::Result<T>) -> Result<T> {
    r.map_err(|e| anyhow::Error::new(e).context(format!("stage `{name}` failed")))
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Coulomb(a) => coulomb(a),
        Command::Morse(MorseCommand::Susy(a)) => morse_susy(a),
        Command::Morse(MorseCommand::Scan(a)) => morse_scan(a),
        Command::Rm2(c) => rm2(c),
        Command::Partner(a) => partner(a),
        Command::Poly(PolyCommand::Eval(a)) => poly_eval(a.family),
    }
}

fn read_input(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))
}

fn read_params<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read_input(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![lo];
    }
    let h = (hi - lo) / (steps - 1) as f64;
    (0..steps).map(|k| if k + 1 == steps { hi } else { lo + h * k as f64 }).collect()
}

fn check_finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!("--{name} must be finite")))
    }
}

fn check_range(lo_name: &str, lo: f64, hi_name: &str, hi: f64, steps_name: &str, steps: usize) -> Result<()> {
    check_finite(lo_name, lo)?;
    check_finite(hi_name, hi)?;
    if steps == 0 {
        return Err(invalid(format!("--{steps_name} must be at least 1")));
    }
    if !(hi >= lo) || (steps > 1 && hi == lo) {
        return Err(invalid(format!("--{hi_name} must exceed --{lo_name}")));
    }
    Ok(())
}

fn morse_params(m: &MorseModel, default_gamma: Option<f64>) -> Result<Morse> {
    let base: Option<Morse> = m.params.as_deref().map(read_params).transpose()?;
    let pick = |flag: Option<f64>, file: Option<f64>, name: &str| {
        flag.or(file).ok_or_else(|| invalid(format!("--{name} is required (or give --params)")))
    };
    let v0 = pick(m.v0, base.map(|b| b.v0), "v0")?;
    let alpha = pick(m.alpha, base.map(|b| b.alpha), "alpha")?;
    let gamma = pick(m.gamma, base.map(|b| b.gamma).or(default_gamma), "gamma")?;
    Ok(Morse::new(v0, alpha, gamma)?)
}

fn rm2_params(m: &Rm2Model) -> Result<RosenMorse> {
    let base: Option<RosenMorse> = m.params.as_deref().map(read_params).transpose()?;
    let pick = |flag: Option<f64>, file: Option<f64>, name: &str| {
        flag.or(file).ok_or_else(|| invalid(format!("--{name} is required (or give --params)")))
    };
    let a = pick(m.a, base.map(|b| b.a), "a")?;
    let b = pick(m.b, base.map(|b| b.b), "b")?;
    let delta = pick(m.delta, base.map(|b| b.delta), "delta")?;
    let c = m.c.or(base.map(|b| b.c)).unwrap_or(0.0);
    Ok(RosenMorse::new(a, b, delta, c)?)
}

fn cj(z: Complex64) -> ComplexJson {
    z.into()
}

#[derive(Serialize)]
struct LevelJson {
    mu: usize,
    lambda: ComplexJson,
    printed_lambda: ComplexJson,
    epsilon: f64,
    row_residual: f64,
}

#[derive(Serialize)]
struct SampleJson {
    r: f64,
    value: ComplexJson,
}

fn coulomb(a: CoulombArgs) -> Result<()> {
    check_finite("z", a.z)?;
    if !(a.z > 0.0) {
        return Err(invalid("--z must be positive"));
    }
    let bytes = if let Some(mu) = a.profile_mu {
        if !(a.r_min > 0.0) {
            return Err(invalid("--r-min must be positive"));
        }
        check_range("r-min", a.r_min, "r-max", a.r_max, "r-steps", a.r_steps)?;
        let grid = linspace(a.r_min, a.r_max, a.r_steps);
        let values = stage("wavefunction", models::coulomb_wavefunction(a.z, a.ell, mu, &grid))?;
        match a.format {
            Format::Csv => {
                let mut csv = Csv::new(&["r", "value_re", "value_im"])?;
                for (r, v) in grid.iter().zip(&values) {
                    csv.row(&[Field::Real(*r), Field::Complex(*v)])?;
                }
                csv.finish()?
            }
            Format::Json => {
                let rows: Vec<_> = grid.iter().zip(&values).map(|(&r, &v)| SampleJson { r, value: cj(v) }).collect();
                json(&rows)?
            }
        }
    } else {
        let states = stage("bound states", models::coulomb_bound_states(a.z, a.ell, a.mu_max))?;
        match a.format {
            Format::Csv => {
                let mut csv = Csv::new(&["mu", "lambda_re", "lambda_im", "epsilon"])?;
                for s in &states {
                    csv.row(&[Field::Int(s.mu), Field::Complex(s.lambda), Field::Real(s.epsilon)])?;
                }
                csv.finish()?
            }
            Format::Json => {
                let rows: Vec<_> = states
                    .iter()
                    .map(|s| LevelJson {
                        mu: s.mu,
                        lambda: cj(s.lambda),
                        printed_lambda: cj(s.printed_lambda),
                        epsilon: s.epsilon,
                        row_residual: s.row_residual,
                    })
                    .collect();
                json(&rows)?
            }
        }
    };
    emit(a.output.out.as_deref(), &bytes)
}

#[derive(Serialize)]
struct MorseSusyJson {
    params: Morse,
    n: usize,
    d: ComplexJson,
    shift: ComplexJson,
    shift_deviation_zero: f64,
    shift_deviation_resolved: f64,
    /// `H`
    operator: OperatorJson,
    /// Closed-form partner.
    partner: OperatorJson,
    /// Gauge-invariant factor products of `H - shift`.
    sigma: Vec<ComplexJson>,
    tau: Vec<ComplexJson>,
}

fn morse_susy(a: MorseSusyArgs) -> Result<()> {
    let p = morse_params(&a.model, None)?;
    if a.n < 3 {
        return Err(invalid("--n must be at least 3"));
    }
    let op = stage("operator", models::morse_operator(&p, a.n))?;
    let partner = stage("closed partner", models::morse_partner_closed(&p, a.n))?;
    let res = stage("shift resolution", models::partner_shift_resolution(&p, a.n))?;
    let coeffs = stage("factorization", sigma_tau(&op.shifted(-p.shift())))?;
    let out = MorseSusyJson {
        params: p,
        n: a.n,
        d: cj(p.d()),
        shift: cj(p.shift()),
        shift_deviation_zero: res.deviation_zero,
        shift_deviation_resolved: res.deviation_shift,
        operator: (&op).into(),
        partner: (&partner).into(),
        sigma: coeffs.sigma.iter().map(|&z| cj(z)).collect(),
        tau: coeffs.tau.iter().map(|&z| cj(z)).collect(),
    };
    emit(a.output.out.as_deref(), &json(&out)?)
}

fn morse_scan(a: MorseScanArgs) -> Result<()> {
    let p = morse_params(&a.model, Some(0.0))?;
    if !(a.lambda_min > 0.0) {
        return Err(invalid("--lambda-min must be positive"));
    }
    check_range("lambda-min", a.lambda_min, "lambda-max", a.lambda_max, "steps", a.steps)?;
    if a.n == 0 {
        return Err(invalid("--n must be at least 1"));
    }
    if !(a.imag_tol > 0.0) || !a.imag_tol.is_finite() {
        return Err(invalid("--imag-tol must be positive"));
    }
    let lambdas = linspace(a.lambda_min, a.lambda_max, a.steps);
    let records = reality_scan(|x| models::morse_potential(&p, x), &lambdas, a.n, a.imag_tol);
    let mut csv = Csv::new(&["lambda", "real_count", "pair_count", "unpaired_count", "max_imag"])?;
    let mut failed = 0;
    for r in &records {
        match (r.classification, r.max_imag) {
            (Some(c), Some(m)) => {
                csv.row(&[Field::Real(r.lambda), Field::Int(c.real), Field::Int(c.pairs), Field::Int(c.unpaired), Field::Real(m)])?
            }
            _ => {
                failed += 1;
                let why = r.error.as_ref().map_or_else(|| "unknown".to_string(), |e| e.to_string());
                eprintln!("ptsusy: lambda = {}: {why}", r.lambda);
                csv.row(&[Field::Real(r.lambda), Field::Empty, Field::Empty, Field::Empty, Field::Empty])?;
            }
        }
    }
    if failed == records.len() {
        let first = records[0].error.clone().unwrap_or(ptsusy::Error::FormulaRegression("no spectrum".into()));
        return stage("scan", Err(first));
    }
    emit(a.output.out.as_deref(), &csv.finish()?)
}

#[derive(Serialize)]
struct Rm2LevelJson {
    n: usize,
    energy: f64,
    a: ComplexJson,
    mu: ComplexJson,
    nu: ComplexJson,
}

fn grid_points(g: &Grid) -> Result<Vec<f64>> {
    check_range("x-min", g.x_min, "x-max", g.x_max, "x-steps", g.x_steps)?;
    Ok(linspace(g.x_min, g.x_max, g.x_steps))
}

fn rm2(cmd: Rm2Command) -> Result<()> {
    match cmd {
        Rm2Command::Levels { model, n_max, format, output } => {
            let p = rm2_params(&model)?;
            let mut rows = Vec::with_capacity(n_max + 1);
            for n in 0..=n_max {
                let energy = stage("levels", models::rm2_energy(&p, n))?;
                let a = stage("levels", p.a_param(n))?;
                let (mu, nu) = stage("levels", p.jacobi_params(n))?;
                rows.push(Rm2LevelJson { n, energy, a: cj(a), mu: cj(mu), nu: cj(nu) });
            }
            let bytes = match format {
                Format::Json => json(&rows)?,
                Format::Csv => {
                    let mut csv = Csv::new(&["n", "energy", "a_re", "a_im", "mu_re", "mu_im", "nu_re", "nu_im"])?;
                    for r in &rows {
                        csv.row(&[
                            Field::Int(r.n),
                            Field::Real(r.energy),
                            Field::Complex(r.a.into()),
                            Field::Complex(r.mu.into()),
                            Field::Complex(r.nu.into()),
                        ])?;
                    }
                    csv.finish()?
                }
            };
            emit(output.out.as_deref(), &bytes)
        }
        Rm2Command::Potential { model, grid, output } => {
            let p = rm2_params(&model)?;
            let mut csv = Csv::new(&["x", "v_re", "v_im"])?;
            for x in grid_points(&grid)? {
                csv.row(&[Field::Real(x), Field::Complex(models::rm2_potential(&p, x))])?;
            }
            emit(output.out.as_deref(), &csv.finish()?)
        }
        Rm2Command::Basis { model, n, exponents, grid, output } => {
            let p = rm2_params(&model)?;
            let pair = match exponents {
                Exponents::Half => ExponentPair::Half,
                Exponents::ShiftedAlpha => ExponentPair::ShiftedAlpha,
                Exponents::ShiftedBeta => ExponentPair::ShiftedBeta,
            };
            let mut csv = Csv::new(&["x", "value_re", "value_im"])?;
            for x in grid_points(&grid)? {
                let v = stage("basis", models::rm2_basis(&p, n, x, pair))?;
                csv.row(&[Field::Real(x), Field::Complex(v)])?;
            }
            emit(output.out.as_deref(), &csv.finish()?)
        }
    }
}

fn load_operator(path: &Path) -> Result<Operator> {
    Operator::from_json(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn partner(a: PartnerArgs) -> Result<()> {
    let op = load_operator(&a.input)?;
    let gauge = match a.gauge {
        GaugeArg::PaperConjugate => Gauge::PaperConjugate,
        GaugeArg::Doolittle => Gauge::Doolittle,
    };
    let (_, _, h_plus) = stage("partner", partner_of(&op, gauge))?;
    let mut text = h_plus.to_json();
    text.push('\n');
    emit(a.output.out.as_deref(), text.as_bytes())
}

/// Explicit points followed by `--random` draws from `[-1, 1]` (squared box when complex).
fn points(p: &Points, real_only: bool) -> Result<Vec<Complex64>> {
    if real_only && p.at.iter().any(|z| z.im != 0.0) {
        return Err(invalid("this family takes real points only"));
    }
    let mut out = p.at.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    for _ in 0..p.random {
        let re = rng.gen_range(-1.0..=1.0);
        let im = if real_only { 0.0 } else { rng.gen_range(-1.0..=1.0) };
        out.push(Complex64::new(re, im));
    }
    if out.is_empty() {
        return Err(invalid("no evaluation points: give --at or --random"));
    }
    Ok(out)
}

fn table(p: &Points, pts: &[Complex64], mut f: impl FnMut(usize, usize, Complex64) -> Result<Complex64>) -> Result<()> {
    let mut csv = Csv::new(&["n", "point_re", "point_im", "value_re", "value_im"])?;
    for n in 0..=p.n_max {
        for (j, &z) in pts.iter().enumerate() {
            csv.row(&[Field::Int(n), Field::Complex(z), Field::Complex(f(n, j, z)?)])?;
        }
    }
    emit(p.output.out.as_deref(), &csv.finish()?)
}

fn poly_eval(family: Family) -> Result<()> {
    match family {
        Family::Hermite { points: p } => {
            let pts = points(&p, true)?;
            table(&p, &pts, |n, _, z| Ok(Complex64::new(specfun::hermite(n, z.re), 0.0)))
        }
        Family::Laguerre { alpha, points: p } => {
            let pts = points(&p, false)?;
            table(&p, &pts, |n, _, z| Ok(specfun::laguerre_assoc(n, alpha, z)))
        }
        Family::Jacobi { mu, nu, points: p } => {
            let pts = points(&p, false)?;
            table(&p, &pts, |n, _, z| stage("jacobi", specfun::jacobi(n, mu, nu, z)))
        }
        Family::Cdhahn { a, b, c, points: p } => {
            let pts = points(&p, false)?;
            table(&p, &pts, |n, _, z| stage("cdhahn", specfun::cdhahn(n, z, a, b, c)))
        }
        Family::Wilson { a, b, c, d, points: p } => {
            let pts = points(&p, false)?;
            table(&p, &pts, |n, _, z| stage("wilson", specfun::wilson(n, z, a, b, c, d)))
        }
        Family::Morse { model, partner, points: p } => {
            let m = morse_params(&model, None)?;
            let family = if partner { MorseFamily::Partner } else { MorseFamily::Original };
            let pts = points(&p, false)?;
            table(&p, &pts, |n, _, e| stage("morse", models::morse_pn(&m, e, n, family)))
        }
        Family::Operator { input, points: p } => {
            let op = load_operator(&input)?;
            if p.n_max >= op.len() {
                return Err(invalid(format!("--n-max must be below the operator size {}", op.len())));
            }
            let pts = points(&p, false)?;
            let t = stage("recurrence", recurrence_eval(&op, &pts, p.n_max))?;
            table(&p, &pts, |n, j, _| Ok(t.values[n][j]))
        }
    }
}
