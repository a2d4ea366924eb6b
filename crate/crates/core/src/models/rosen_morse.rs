//! PT-symmetric Rosen-Morse II, standard (`c = 0`) and generalized, with `hbar = m = 1`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{from_real, idx, re, Cplx, Real};
use crate::specfun::jacobi;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RosenMorseII<T: Real> {
    pub a: T,
    pub b: T,
    pub delta: T,
    /// Coefficient of the generalized `i tanh sech^2` term.
    #[serde(default)]
    pub c: T,
}

impl<T: Real> RosenMorseII<T> {
    pub fn new(a: T, b: T, delta: T, c: T) -> Result<Self> {
        let p = Self { a, b, delta, c };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.delta > T::zero()) || !self.a.is_finite() || !self.b.is_finite() || !self.c.is_finite() {
            return Err(Error::InvalidParameter(format!("need finite A, B, C and delta > 0 (got delta = {})", self.delta)));
        }
        Ok(())
    }

    /// `s = sqrt2 A / delta`
    pub fn s(&self) -> T {
        T::SQRT_2() * self.a / self.delta
    }

    /// `i sqrt2 B / delta`
    pub fn lambda_tilde(&self) -> Cplx<T> {
        Complex::new(T::zero(), T::SQRT_2() * self.b / self.delta)
    }

    /// `A - n delta / sqrt2`; errors when it vanishes.
    fn level(&self, n: usize) -> Result<T> {
        let k = self.a - idx::<T>(n) * self.delta / T::SQRT_2();
        if k.abs() <= T::eps() * self.a.abs().max(T::one()) {
            return Err(Error::DegenerateParameters(format!("A - n delta / sqrt2 vanishes at n = {n}")));
        }
        Ok(k)
    }

    /// `a_n = sqrt2 lambda_tilde / (delta (s - n))`
    pub fn a_param(&self, n: usize) -> Result<Cplx<T>> {
        let k = self.level(n)?;
        Ok(self.lambda_tilde() * T::SQRT_2() / (self.delta * (T::SQRT_2() * k / self.delta)))
    }

    /// Jacobi parameters `(mu, nu) = (s - n + a_n, s - n - a_n)`.
    pub fn jacobi_params(&self, n: usize) -> Result<(Cplx<T>, Cplx<T>)> {
        let a = self.a_param(n)?;
        let base = from_real(self.s() - idx::<T>(n));
        Ok((base + a, base - a))
    }

    /// The three exponent pairs `(alpha~, beta~)` that give closed-form solutions.
    pub fn admissible_exponents(&self, n: usize) -> Result<[(Cplx<T>, Cplx<T>); 3]> {
        let (mu, nu) = self.jacobi_params(n)?;
        let half = re::<T>(0.5);
        let one: Cplx<T> = from_real(T::one());
        Ok([(mu * half, nu * half), ((mu + one) * half, nu * half), (mu * half, (nu + one) * half)])
    }
}

/// `E_n = -(A - n delta/sqrt2)^2 + B^2 / (A - n delta/sqrt2)^2`
pub fn rm2_energy<T: Real>(p: &RosenMorseII<T>, n: usize) -> Result<T> {
    let k = p.level(n)?;
    Ok(-k * k + p.b * p.b / (k * k))
}

/// `V(x) = 2iB tanh(dx) - A(A + d/sqrt2) sech^2(dx) + iC tanh(dx) sech^2(dx)`
pub fn rm2_potential<T: Real>(p: &RosenMorseII<T>, x: T) -> Cplx<T> {
    let t = (p.delta * x).tanh();
    let s2 = T::one() - t * t;
    let two = re::<T>(2.0);
    Complex::new(-p.a * (p.a + p.delta / T::SQRT_2()) * s2, two * p.b * t + p.c * t * s2)
}

/// Selects one of [`RosenMorseII::admissible_exponents`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExponentPair {
    /// `(mu/2, nu/2)`
    Half,
    /// `((mu+1)/2, nu/2)`
    ShiftedAlpha,
    /// `(mu/2, (nu+1)/2)`
    ShiftedBeta,
}

impl ExponentPair {
    /// Matches explicit exponents against the admissible pairs for level `n`.
    pub fn identify<T: Real>(p: &RosenMorseII<T>, n: usize, alpha: Cplx<T>, beta: Cplx<T>) -> Result<Self> {
        let pairs = p.admissible_exponents(n)?;
        let tol = re::<T>(1e-12);
        let close = |a: Cplx<T>, b: Cplx<T>| (a - b).norm() <= tol * a.norm().max(b.norm()).max(T::one());
        [Self::Half, Self::ShiftedAlpha, Self::ShiftedBeta]
            .into_iter()
            .zip(pairs)
            .find(|(_, (a, b))| close(*a, alpha) && close(*b, beta))
            .map(|(which, _)| which)
            .ok_or_else(|| Error::InvalidParameter(format!("exponent pair ({alpha}, {beta}) is not admissible at n = {n}")))
    }

    fn index(self) -> usize {
        match self {
            Self::Half => 0,
            Self::ShiftedAlpha => 1,
            Self::ShiftedBeta => 2,
        }
    }
}

/// `ln(1 - tanh t)` and `ln(1 + tanh t)` without cancellation for large `|t|`.
fn log_one_minus_plus<T: Real>(t: T) -> (T, T) {
    // 1 - tanh t = 2 / (1 + e^{2t}), 1 + tanh t = 2 / (1 + e^{-2t})
    let ln2 = T::LN_2();
    let softplus = |u: T| if u > T::zero() { u + (-u).exp().ln_1p() } else { u.exp().ln_1p() };
    let two = re::<T>(2.0);
    (ln2 - softplus(two * t), ln2 - softplus(-two * t))
}

/// Unnormalized (`C_n = 1`) basis `psi_n = (1-y)^{alpha~} (1+y)^{beta~} P_n^{(mu,nu)}(y)`, `y = tanh(delta x)`.
pub fn rm2_basis<T: Real>(p: &RosenMorseII<T>, n: usize, x: T, pair: ExponentPair) -> Result<Cplx<T>> {
    p.validate()?;
    let (alpha, beta) = p.admissible_exponents(n)?[pair.index()];
    let (mu, nu) = p.jacobi_params(n)?;
    let t = p.delta * x;
    let (lm, lp) = log_one_minus_plus(t);
    let envelope = (alpha * lm + beta * lp).exp();
    let poly = jacobi(n, mu, nu, from_real(t.tanh()))?;
    Ok(envelope * poly)
}

/// [`rm2_basis`] with explicit exponents, rejected unless admissible.
pub fn rm2_basis_with_exponents<T: Real>(p: &RosenMorseII<T>, n: usize, x: T, alpha: Cplx<T>, beta: Cplx<T>) -> Result<Cplx<T>> {
    let pair = ExponentPair::identify(p, n, alpha, beta)?;
    rm2_basis(p, n, x, pair)
}
