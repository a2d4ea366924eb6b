//! PT-symmetric Morse oscillator `V(x) = V0 (e^{-2i alpha x} - 2 e^{-i alpha x})`.

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{from_real, i_unit, idx, re, Cplx, Real};
use crate::specfun::{gamma, laguerre_assoc, TerminatingHypergeometric};
use crate::susy::{partner_of, Gauge};
use crate::tridiag::TridiagonalOperator;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorseParams<T: Real> {
    pub v0: T,
    pub alpha: T,
    /// Laguerre basis parameter; anything except `-1/2`.
    pub gamma: T,
}

impl<T: Real> MorseParams<T> {
    pub fn new(v0: T, alpha: T, gamma: T) -> Result<Self> {
        let p = Self { v0, alpha, gamma };
        p.validate()?;
        Ok(p)
    }

    /// Re-checks the invariants, e.g. after deserializing.
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > T::zero()) || !self.v0.is_finite() || !self.gamma.is_finite() {
            return Err(Error::InvalidParameter(format!("need finite V0, gamma and alpha > 0 (got alpha = {})", self.alpha)));
        }
        if (self.gamma + re::<T>(0.5)).abs() <= T::eps() {
            return Err(Error::InvalidParameter("gamma = -1/2 is excluded".into()));
        }
        Ok(())
    }

    /// `D = sqrt(-2 V0 / alpha^2) - 1/2`, principal root.
    pub fn d(&self) -> Cplx<T> {
        from_real(-re::<T>(2.0) * self.v0 / (self.alpha * self.alpha)).sqrt() - re::<T>(0.5)
    }

    fn half_a2(&self) -> T {
        self.alpha * self.alpha / re::<T>(2.0)
    }

    /// `-alpha^2 D^2 / 2`: the energy at which the operator factorizes.
    pub fn shift(&self) -> Cplx<T> {
        let d = self.d();
        -d * d * self.half_a2()
    }

    /// `xi(x) = sqrt(-8 V0 / alpha^2) e^{-i alpha x}`.
    pub fn xi(&self, x: T) -> Cplx<T> {
        let amp = from_real(-re::<T>(8.0) * self.v0 / (self.alpha * self.alpha)).sqrt();
        amp * Complex::from_polar(T::one(), -self.alpha * x)
    }

    /// Continuous dual Hahn variable `x` with `x^2 = 2E / alpha^2`, principal root.
    pub fn spectral_variable(&self, energy: Cplx<T>) -> Cplx<T> {
        (energy / self.half_a2()).sqrt()
    }

    /// `(n + gamma + 1/2 - D)`
    fn a_lin(&self, n: usize) -> Cplx<T> {
        from_real(idx::<T>(n) + self.gamma + re::<T>(0.5)) - self.d()
    }

    /// `sqrt(n (n + 2 gamma))`, principal root.
    fn root_c(&self, n: usize) -> Cplx<T> {
        let nf = idx::<T>(n);
        from_real(nf * (nf + re::<T>(2.0) * self.gamma)).sqrt()
    }
}

pub fn morse_potential<T: Real>(p: &MorseParams<T>, x: T) -> Cplx<T> {
    let e1 = Complex::from_polar(T::one(), -p.alpha * x);
    (e1 * e1 - e1 * re::<T>(2.0)) * p.v0
}

/// Hamiltonian in the Laguerre basis as a complex-symmetric tridiagonal operator.
///
/// `diag_n = (a^2/2)[(n+g+1/2-D)^2 + n(n+2g) - D^2]`,
/// `sub_n = sup_n = -(a^2/2) sqrt((n+1)(n+1+2g)) (n+g+1/2-D)`.
pub fn morse_operator<T: Real>(p: &MorseParams<T>, n: usize) -> Result<TridiagonalOperator<T>> {
    p.validate()?;
    if n == 0 {
        return Err(Error::InvalidParameter("operator needs at least one row".into()));
    }
    let h = p.half_a2();
    let d = p.d();
    let diag = (0..n)
        .map(|k| {
            let a = p.a_lin(k);
            let c = p.root_c(k);
            (a * a + c * c - d * d) * h
        })
        .collect();
    let off: Vec<Cplx<T>> = (0..n - 1).map(|k| -p.root_c(k + 1) * p.a_lin(k) * h).collect();
    TridiagonalOperator::new(diag, off.clone(), off)
}

/// Closed-form bidiagonal factors of `morse_operator - shift`:
/// `c_n = (i a / sqrt2)(n + g + 1/2 - D)` and `d_n = -(i a / sqrt2) sqrt(n (n + 2g))`, `d_0 = 0`.
///
/// The conjugation in these factors is formal (it flips the explicit `i` only), so
/// `sigma_n = -c_n^2`, `tau_n = -d_n^2` and `sub_n = -c_n d_{n+1}`.
pub fn morse_cd<T: Real>(p: &MorseParams<T>, n: usize) -> (Vec<Cplx<T>>, Vec<Cplx<T>>) {
    let k = i_unit::<T>() * (p.alpha / T::SQRT_2());
    let c = (0..n).map(|j| k * p.a_lin(j)).collect();
    let d = (0..n).map(|j| -k * p.root_c(j)).collect();
    (c, d)
}

/// Partner `A B + shift` in closed form.
///
/// `diag+_n = (a^2/2)[(n+1)(n+1+2g) + (n+g+1/2-D)^2] + S` with `S = -a^2 D^2 / 2`, and
/// `sub+_n = sup+_n = -(a^2/2) sqrt((n+1)(n+1+2g)) (n+g+3/2-D)`.
/// [`partner_shift_resolution`] checks the choice of `S` against the factorization.
pub fn morse_partner_closed<T: Real>(p: &MorseParams<T>, n: usize) -> Result<TridiagonalOperator<T>> {
    closed_partner_with(p, n, p.shift())
}

fn closed_partner_with<T: Real>(p: &MorseParams<T>, n: usize, s: Cplx<T>) -> Result<TridiagonalOperator<T>> {
    p.validate()?;
    if n == 0 {
        return Err(Error::InvalidParameter("operator needs at least one row".into()));
    }
    let h = p.half_a2();
    let diag = (0..n)
        .map(|k| {
            let a = p.a_lin(k);
            let c = p.root_c(k + 1);
            (a * a + c * c) * h + s
        })
        .collect();
    let off: Vec<Cplx<T>> = (0..n - 1).map(|k| -p.root_c(k + 1) * p.a_lin(k + 1) * h).collect();
    TridiagonalOperator::new(diag, off.clone(), off)
}

/// Which constant makes the closed-form partner agree with `partner(H - shift) + shift`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftResolution<T: Real> {
    pub shift: Cplx<T>,
    /// Max entry deviation (leading `N-1` rows) with `S = 0`.
    pub deviation_zero: T,
    /// Max entry deviation with `S = shift`.
    pub deviation_shift: T,
}

impl<T: Real> ShiftResolution<T> {
    pub fn resolved(&self) -> Cplx<T> {
        if self.deviation_shift <= self.deviation_zero {
            self.shift
        } else {
            Cplx::zero()
        }
    }
}

/// Compares both candidate constants against the matrix factorization.
pub fn partner_shift_resolution<T: Real>(p: &MorseParams<T>, n: usize) -> Result<ShiftResolution<T>> {
    if n < 3 {
        return Err(Error::InvalidParameter("shift resolution needs N >= 3".into()));
    }
    let shift = p.shift();
    let op = morse_operator(p, n)?.shifted(-shift);
    let (_, _, h_plus) = partner_of(&op, Gauge::PaperConjugate)?;
    let reference = h_plus.shifted(shift).leading(n - 1)?;
    let deviation = |s: Cplx<T>| -> Result<T> {
        let closed = closed_partner_with(p, n - 1, s)?;
        let scale = reference.max_abs().max(T::one());
        let mut worst = T::zero();
        for (a, b) in closed.diag().iter().zip(reference.diag()) {
            worst = worst.max((*a - *b).norm());
        }
        for (a, b) in closed.sub().iter().zip(reference.sub()).chain(closed.sup().iter().zip(reference.sup())) {
            worst = worst.max((*a - *b).norm());
        }
        Ok(worst / scale)
    };
    Ok(ShiftResolution { shift, deviation_zero: deviation(Cplx::zero())?, deviation_shift: deviation(shift)? })
}

/// Polynomial family evaluated by [`morse_pn`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorseFamily {
    /// Expansion coefficients of [`morse_operator`].
    Original,
    /// Expansion coefficients of [`morse_partner_closed`].
    Partner,
}

/// Closed-form `P_n(E)`, normalized to `P_0 = 1`, as a continuous dual Hahn polynomial.
///
/// With `x^2 = 2E / alpha^2`, `kappa = g + 1/2 - D` and `a = -D`,
///
/// `P_n(E) = (kappa)_n / sqrt(n! (2g+1)_n) 3F2(-n, a + ix, a - ix; kappa, kappa; 1)`.
///
/// The partner family has `a = 1 - D` and `kappa = g + 3/2 - D`; the square-root
/// normalization `(2g+1)_n` is the same. The square root is taken factor by factor,
/// matching the branch of the recurrence.
pub fn morse_pn<T: Real>(p: &MorseParams<T>, energy: Cplx<T>, n: usize, family: MorseFamily) -> Result<Cplx<T>> {
    p.validate()?;
    let d = p.d();
    let (a, kappa) = match family {
        MorseFamily::Original => (-d, p.a_lin(0)),
        MorseFamily::Partner => (Cplx::<T>::one() - d, p.a_lin(1)),
    };
    let ix = i_unit::<T>() * p.spectral_variable(energy);
    let series = TerminatingHypergeometric::new(n, vec![a + ix, a - ix], vec![kappa, kappa], Cplx::one());
    let sum = series.sum()?;
    let mut norm = Cplx::<T>::one();
    for j in 0..n {
        let jf = idx::<T>(j);
        let root = from_real((jf + T::one()) * (jf + T::one() + re::<T>(2.0) * p.gamma)).sqrt();
        norm *= (kappa + jf) / root;
    }
    Ok(norm * sum)
}

/// Laguerre basis function
/// `phi_n(x) = sqrt(i alpha n! / Gamma(n + 2g + 1)) xi^{g+1/2} e^{-xi/2} L_n^{2g}(xi)`.
///
/// The power `xi^{g+1/2}` follows the phase of `xi` continuously in `x` (it equals the
/// principal power on `|alpha x| < pi` when `xi(0)` is real positive). For real
/// parameters `|phi_n|` is periodic with period `2 pi / alpha`.
pub fn morse_basis<T: Real>(p: &MorseParams<T>, n: usize, x: T) -> Cplx<T> {
    let amp = from_real(-re::<T>(8.0) * p.v0 / (p.alpha * p.alpha)).sqrt();
    let xi = p.xi(x);
    let ln_xi = Complex::new(amp.norm().ln(), amp.arg() - p.alpha * x);
    let power = (ln_xi * (p.gamma + re::<T>(0.5))).exp();
    let ln_fact = (1..=n).map(|k| idx::<T>(k).ln()).sum::<T>();
    let g = gamma(from_real(idx::<T>(n) + re::<T>(2.0) * p.gamma + T::one()));
    let norm = (i_unit::<T>() * p.alpha * ln_fact.exp() / g).sqrt();
    norm * power * (-xi / re::<T>(2.0)).exp() * laguerre_assoc(n, from_real(re::<T>(2.0) * p.gamma), xi)
}
