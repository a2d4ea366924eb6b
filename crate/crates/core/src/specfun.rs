//! Special functions with complex arguments and parameters.
//!
//! Everything here is a pure function of its inputs. Terminating
//! hypergeometric sums are accumulated in ascending term order with a
//! running-term update, so results are bit-reproducible.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{cmp_real, from_real, i_unit, idx, re, Cplx, Real};

/// Rising factorial `(x)_k = x (x + 1) ... (x + k - 1)`, with `(x)_0 = 1`.
pub fn pochhammer<T: Real>(x: Cplx<T>, k: usize) -> Cplx<T> {
    let mut acc = Cplx::one();
    for j in 0..k {
        acc *= x + from_real(idx::<T>(j));
    }
    acc
}

/// Physicists' Hermite polynomial `H_n(x)`.
pub fn hermite<T: Real>(n: usize, x: T) -> T {
    let two = re::<T>(2.0);
    let mut prev = T::one();
    if n == 0 {
        return prev;
    }
    let mut cur = two * x;
    for k in 1..n {
        let next = two * x * cur - two * idx::<T>(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Associated Laguerre polynomial `L_n^alpha(z)` by forward recurrence.
pub fn laguerre_assoc<T: Real>(n: usize, alpha: Cplx<T>, z: Cplx<T>) -> Cplx<T> {
    let one = Cplx::<T>::one();
    let mut prev = one;
    if n == 0 {
        return prev;
    }
    let mut cur = one + alpha - z;
    for k in 1..n {
        let kf = from_real(idx::<T>(k));
        let next = ((kf * re::<T>(2.0) + one + alpha - z) * cur - (kf + alpha) * prev) / (kf + one);
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi polynomial `P_n^{(mu, nu)}(y)` with complex parameters.
///
/// Uses the standard three-term recurrence. Fails when a recurrence
/// denominator `2(k+1)(k+mu+nu+1)(2k+mu+nu)` vanishes.
pub fn jacobi<T: Real>(n: usize, mu: Cplx<T>, nu: Cplx<T>, y: Cplx<T>) -> Result<Cplx<T>> {
    let one = Cplx::<T>::one();
    let two = from_real(re::<T>(2.0));
    let mut prev = one;
    if n == 0 {
        return Ok(prev);
    }
    let s = mu + nu;
    let mut cur = (s + two) * y / two + (mu - nu) / two;
    for k in 1..n {
        let kf = from_real(idx::<T>(k));
        let c = two * kf + s;
        let denom = two * (kf + one) * (kf + s + one) * c;
        if is_negligible(denom, s.norm() + idx::<T>(k)) {
            return Err(Error::DegenerateParameters(format!(
                "Jacobi recurrence denominator vanishes at k = {k} (mu + nu = {} + {}i)",
                s.re, s.im
            )));
        }
        let a = (c + one) * ((c + two) * c * y + mu * mu - nu * nu);
        let b = two * (kf + mu) * (kf + nu) * (c + two);
        let next = (a * cur - b * prev) / denom;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

fn is_negligible<T: Real>(z: Cplx<T>, scale: T) -> bool {
    z.norm() <= re::<T>(4.0) * T::eps() * scale.max(T::one())
}

/// A terminating generalized hypergeometric series
/// `pFq(-n, a_1..a_p; b_1..b_q; z)`.
///
/// The terminating parameter `-n` is implied by `degree` and is not stored in
/// `upper`.
#[derive(Debug, Clone, PartialEq)]
pub struct TerminatingHypergeometric<T: Real> {
    pub degree: usize,
    pub upper: Vec<Cplx<T>>,
    pub lower: Vec<Cplx<T>>,
    pub argument: Cplx<T>,
}

impl<T: Real> TerminatingHypergeometric<T> {
    pub fn new(degree: usize, upper: Vec<Cplx<T>>, lower: Vec<Cplx<T>>, argument: Cplx<T>) -> Self {
        Self { degree, upper, lower, argument }
    }

    /// Checks that no lower parameter equals `-k` for `0 <= k < degree`.
    pub fn validate(&self) -> Result<()> {
        for (j, b) in self.lower.iter().enumerate() {
            for k in 0..self.degree {
                let shifted = *b + from_real(idx::<T>(k));
                if is_negligible(shifted, b.norm()) {
                    return Err(Error::LowerParameterPole { param: j, k });
                }
            }
        }
        Ok(())
    }

    /// Sums the `degree + 1` terms in ascending order.
    pub fn sum(&self) -> Result<Cplx<T>> {
        hyp_terminating(self)
    }
}

/// Evaluates a [`TerminatingHypergeometric`] series.
pub fn hyp_terminating<T: Real>(spec: &TerminatingHypergeometric<T>) -> Result<Cplx<T>> {
    Ok(summed(spec)?.0)
}

/// Series value together with `sum |term_k|`.
fn summed<T: Real>(spec: &TerminatingHypergeometric<T>) -> Result<(Cplx<T>, T)> {
    spec.validate()?;
    let n = from_real(idx::<T>(spec.degree));
    let mut term = Cplx::<T>::one();
    let mut total = term;
    let mut magnitude = T::one();
    for k in 0..spec.degree {
        let kf = from_real(idx::<T>(k));
        let mut ratio = (kf - n) * spec.argument / (kf + Cplx::one());
        for a in &spec.upper {
            ratio *= *a + kf;
        }
        for b in &spec.lower {
            ratio /= *b + kf;
        }
        term *= ratio;
        total += term;
        magnitude += term.norm();
    }
    Ok((total, magnitude))
}

/// Continuous dual Hahn polynomial `S_n(x^2; a, b, c)`.
///
/// `x` is the principal square root of `x2`; the value depends on `x^2` only.
pub fn cdhahn<T: Real>(n: usize, x2: Cplx<T>, a: Cplx<T>, b: Cplx<T>, c: Cplx<T>) -> Result<Cplx<T>> {
    let ix = i_unit::<T>() * x2.sqrt();
    let series = TerminatingHypergeometric::new(n, vec![a + ix, a - ix], vec![a + b, a + c], Cplx::one());
    Ok(pochhammer(a + b, n) * pochhammer(a + c, n) * hyp_terminating(&series)?)
}

/// Wilson polynomial `W_n(x^2; a, b, c, d)` via its terminating 4F3 sum.
///
/// The polynomial is symmetric in `a, b, c, d` but the 4F3 form singles one
/// parameter out. The parameters are put in a canonical order and each is tried in
/// the distinguished slot; the best-conditioned sum (smallest
/// `sum |term| / |sum|`) is returned, so permuted arguments give identical results.
pub fn wilson<T: Real>(n: usize, x2: Cplx<T>, a: Cplx<T>, b: Cplx<T>, c: Cplx<T>, d: Cplx<T>) -> Result<Cplx<T>> {
    let mut params = [a, b, c, d];
    params.sort_by(|p, q| cmp_real(&p.re, &q.re).then(cmp_real(&p.im, &q.im)));
    let ix = i_unit::<T>() * x2.sqrt();
    let nf = from_real(idx::<T>(n));
    let total = params.iter().fold(Cplx::<T>::zero(), |acc, p| acc + *p);
    let mut best: Option<(Cplx<T>, T)> = None;
    let mut first_err = None;
    for lead in 0..4 {
        let a = params[lead];
        let rest: Vec<Cplx<T>> = (0..4).filter(|&j| j != lead).map(|j| params[j]).collect();
        let series = TerminatingHypergeometric::new(
            n,
            vec![nf + total - Cplx::one(), a + ix, a - ix],
            rest.iter().map(|r| a + *r).collect(),
            Cplx::one(),
        );
        match summed(&series) {
            Ok((sum, magnitude)) => {
                let value = rest.iter().fold(sum, |acc, r| acc * pochhammer(a + *r, n));
                let condition = if sum.is_zero() { T::infinity() } else { magnitude / sum.norm() };
                if best.is_none_or(|(_, c)| condition < c) {
                    best = Some((value, condition));
                }
            }
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    match (best, first_err) {
        (Some((value, _)), _) => Ok(value),
        (None, Some(e)) => Err(e),
        (None, None) => unreachable!("four candidate sums were attempted"),
    }
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Principal logarithm of `Gamma(z)` (imaginary part in `(-pi, pi]`).
///
/// Lanczos approximation (g = 7, 9 terms) with reflection for `Re z < 1/2`.
pub fn ln_gamma<T: Real>(z: Cplx<T>) -> Cplx<T> {
    let raw = ln_gamma_raw(z);
    Complex::new(raw.re, wrap_phase(raw.im))
}

fn wrap_phase<T: Real>(phi: T) -> T {
    let two_pi = T::PI() + T::PI();
    let mut p = phi % two_pi;
    if p > T::PI() {
        p -= two_pi;
    } else if p <= -T::PI() {
        p += two_pi;
    }
    p
}

fn ln_gamma_raw<T: Real>(z: Cplx<T>) -> Cplx<T> {
    let half = re::<T>(0.5);
    if z.re < half {
        // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
        let pi = from_real(T::PI());
        let s = (pi * z).sin();
        return pi.ln() - s.ln() - ln_gamma_raw(Cplx::<T>::one() - z);
    }
    let zm = z - Cplx::one();
    let mut x = from_real(re::<T>(LANCZOS_COEFFS[0]));
    for (i, &p) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        x += from_real(re::<T>(p)) / (zm + from_real(idx::<T>(i)));
    }
    let t = zm + from_real(re::<T>(LANCZOS_G) + half);
    let half_ln_two_pi = re::<T>(0.918_938_533_204_672_8);
    from_real(half_ln_two_pi) + (zm + from_real(half)) * t.ln() - t + x.ln()
}

/// `Gamma(z)` for complex `z` (not at the poles).
pub fn gamma<T: Real>(z: Cplx<T>) -> Cplx<T> {
    ln_gamma_raw(z).exp()
}
