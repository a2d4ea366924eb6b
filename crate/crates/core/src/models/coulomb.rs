//! Radial Coulomb problem with imaginary charge `iz` in a Laguerre basis.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{from_real, i_unit, idx, re, Cplx, Real};
use crate::specfun::{gamma, laguerre_assoc};
use crate::tridiag::TridiagonalOperator;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombImaginaryCharge<T: Real> {
    pub z: T,
    pub ell: usize,
    /// Basis scale parameter.
    pub lambda: Cplx<T>,
}

impl<T: Real> CoulombImaginaryCharge<T> {
    pub fn new(z: T, ell: usize, lambda: Cplx<T>) -> Result<Self> {
        if !(z > T::zero()) {
            return Err(Error::InvalidParameter(format!("charge magnitude z must be positive, got {z}")));
        }
        Ok(Self { z, ell, lambda })
    }
}

/// J-matrix `H - epsilon` in the Laguerre basis, truncated to `n` rows.
///
/// `J_{n,n} = i lambda z - (epsilon - lambda^2/8)(2n + 2l + 2)` and
/// `J_{n,n+1} = J_{n+1,n} = (epsilon + lambda^2/8) sqrt((n+1)(2n+2l+2))`.
pub fn coulomb_jmatrix<T: Real>(p: &CoulombImaginaryCharge<T>, epsilon: Cplx<T>, n: usize) -> Result<TridiagonalOperator<T>> {
    if n == 0 {
        return Err(Error::InvalidParameter("J-matrix needs at least one row".into()));
    }
    let lam = p.lambda;
    let l8 = lam * lam / re::<T>(8.0);
    let ell = idx::<T>(p.ell);
    let two = re::<T>(2.0);
    let diag = (0..n).map(|k| i_unit::<T>() * lam * p.z - (epsilon - l8) * (two * idx::<T>(k) + two * ell + two)).collect();
    let off: Vec<Cplx<T>> = (0..n - 1)
        .map(|k| {
            let kf = idx::<T>(k);
            (epsilon + l8) * ((kf + T::one()) * (two * kf + two * ell + two)).sqrt()
        })
        .collect();
    TridiagonalOperator::new(diag, off.clone(), off)
}

/// One bound state of the imaginary-charge Coulomb problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState<T: Real> {
    pub mu: usize,
    /// Scale at which row `mu` of the J-matrix vanishes.
    pub lambda: Cplx<T>,
    /// `+2iz / (mu + l + 1)`, as usually written; kept for comparison.
    pub printed_lambda: Cplx<T>,
    /// `z^2 / (2 (mu + l + 1)^2)`
    pub epsilon: T,
    /// `|J_{mu,mu}|` and `|J_{mu,mu+1}|` at `(lambda, epsilon)`, relative to the row scale.
    pub row_residual: T,
}

fn row_residual<T: Real>(z: T, ell: usize, mu: usize, lambda: Cplx<T>, epsilon: T) -> Result<T> {
    let p = CoulombImaginaryCharge::new(z, ell, lambda)?;
    let j = coulomb_jmatrix(&p, from_real(epsilon), mu + 2)?;
    let two = re::<T>(2.0);
    let weight = two * idx::<T>(mu) + two * idx::<T>(ell) + two;
    let l8 = lambda.norm_sqr() / re::<T>(8.0);
    let scale = lambda.norm() * z + (epsilon.abs() + l8) * weight;
    Ok(j.diag()[mu].norm().max(j.sup()[mu].norm()) / scale)
}

/// Bound states `mu = 0..=mu_max`.
///
/// `epsilon_mu = z^2 / (2 (mu + l + 1)^2)` and `lambda_mu = s 2iz / (mu + l + 1)`, where the
/// sign `s` is whichever of `+1, -1` actually zeroes row `mu` of the J-matrix.
pub fn coulomb_bound_states<T: Real>(z: T, ell: usize, mu_max: usize) -> Result<Vec<BoundState<T>>> {
    if !(z > T::zero()) {
        return Err(Error::InvalidParameter(format!("charge magnitude z must be positive, got {z}")));
    }
    let tol = re::<T>(1e-12);
    (0..=mu_max)
        .map(|mu| {
            let level = idx::<T>(mu + ell + 1);
            let epsilon = z * z / (re::<T>(2.0) * level * level);
            let printed = Complex::new(T::zero(), re::<T>(2.0) * z / level);
            for candidate in [printed, -printed] {
                let r = row_residual(z, ell, mu, candidate, epsilon)?;
                if r <= tol {
                    return Ok(BoundState { mu, lambda: candidate, printed_lambda: printed, epsilon, row_residual: r });
                }
            }
            Err(Error::FormulaRegression(format!("no sign of lambda zeroes J-matrix row {mu} (z = {z}, l = {ell})")))
        })
        .collect()
}

/// Laguerre basis function `B_n (lambda r)^{l+1} e^{-lambda r / 2} L_n^{2l+1}(lambda r)`
/// with `B_n = sqrt(lambda n! / Gamma(n + 2l + 2))`.
pub fn coulomb_basis<T: Real>(p: &CoulombImaginaryCharge<T>, n: usize, r: T) -> Cplx<T> {
    let lam = p.lambda;
    let ln_ratio = (1..=n).map(|k| idx::<T>(k).ln()).sum::<T>();
    let g = gamma(from_real(idx::<T>(n + 2 * p.ell + 2)));
    let norm = (lam * ln_ratio.exp() / g).sqrt();
    let lr = lam * r;
    let power = lr.powu((p.ell + 1) as u32);
    norm * power * (-lr / re::<T>(2.0)).exp() * laguerre_assoc(n, from_real(idx::<T>(2 * p.ell + 1)), lr)
}

/// Bound-state profile `phi_mu(r)` at the bound-state scale `lambda_mu`.
///
/// At `(lambda_mu, epsilon_mu)` the J-matrix row `mu` vanishes identically, so the bound
/// state is the single basis function `phi_mu`.
pub fn coulomb_wavefunction<T: Real>(z: T, ell: usize, mu: usize, r_grid: &[T]) -> Result<Vec<Cplx<T>>> {
    if let Some(r) = r_grid.iter().find(|r| !(**r > T::zero())) {
        return Err(Error::InvalidParameter(format!("radial grid must be positive, got {r}")));
    }
    let state = coulomb_bound_states(z, ell, mu)?.pop().expect("mu_max = mu yields mu + 1 states");
    let p = CoulombImaginaryCharge::new(z, ell, state.lambda)?;
    Ok(r_grid.iter().map(|&r| coulomb_basis(&p, mu, r)).collect())
}
