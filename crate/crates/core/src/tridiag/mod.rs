//! Complex tridiagonal operators and their three-term recurrence.
//!
//! Entry `(n, n)` is `diag[n]`, entry `(n + 1, n)` is `sub[n]` and entry
//! `(n, n + 1)` is `sup[n]`. The two off-diagonals are stored independently:
//! nothing forces `sup = conj(sub)` unless the operator is explicitly flagged
//! pseudo-symmetric.

mod dense;
mod eigen;
mod json;

pub use dense::Matrix;
pub use eigen::{classify, eigenvalues, Classification, SpectrumReport, MAX_QR_SWEEPS_PER_EIGENVALUE};
pub use json::{ComplexJson, OperatorJson};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{re, Cplx, Real};

/// A complex tridiagonal operator of finite length `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator<T: Real> {
    diag: Vec<Cplx<T>>,
    sub: Vec<Cplx<T>>,
    sup: Vec<Cplx<T>>,
    pseudo_symmetric: bool,
}

impl<T: Real> TridiagonalOperator<T> {
    /// Builds an operator, checking `|sub| = |sup| = |diag| - 1`.
    pub fn new(diag: Vec<Cplx<T>>, sub: Vec<Cplx<T>>, sup: Vec<Cplx<T>>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Shape("diag must be non-empty".into()));
        }
        if sub.len() + 1 != diag.len() || sup.len() + 1 != diag.len() {
            return Err(Error::Shape(format!(
                "|diag| = {}, |sub| = {}, |sup| = {} (expected off-diagonals of length {})",
                diag.len(),
                sub.len(),
                sup.len(),
                diag.len() - 1
            )));
        }
        Ok(Self { diag, sub, sup, pseudo_symmetric: false })
    }

    /// Builds an operator with `sup = conj(sub)`.
    pub fn pseudo_symmetric(diag: Vec<Cplx<T>>, sub: Vec<Cplx<T>>) -> Result<Self> {
        let sup = sub.iter().map(|b| b.conj()).collect();
        Self::new(diag, sub, sup)?.with_pseudo_symmetric(true)
    }

    /// Sets the pseudo-symmetric flag; when `true` the relation
    /// `sup[n] = conj(sub[n])` is verified entrywise.
    pub fn with_pseudo_symmetric(mut self, flag: bool) -> Result<Self> {
        if flag {
            let tol = re::<T>(8.0) * T::eps();
            for (n, (b, bs)) in self.sub.iter().zip(&self.sup).enumerate() {
                let scale = b.norm().max(T::min_positive_value());
                if (b.conj() - bs).norm() > tol * scale {
                    return Err(Error::NotPseudoSymmetric { index: n });
                }
            }
        }
        self.pseudo_symmetric = flag;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn diag(&self) -> &[Cplx<T>] {
        &self.diag
    }

    pub fn sub(&self) -> &[Cplx<T>] {
        &self.sub
    }

    pub fn sup(&self) -> &[Cplx<T>] {
        &self.sup
    }

    pub fn is_pseudo_symmetric(&self) -> bool {
        self.pseudo_symmetric
    }

    /// Returns `self + shift * I`.
    pub fn shifted(&self, shift: Cplx<T>) -> Self {
        let diag = self.diag.iter().map(|a| *a + shift).collect();
        Self { diag, sub: self.sub.clone(), sup: self.sup.clone(), pseudo_symmetric: false }
    }

    /// Leading `n x n` block as a tridiagonal operator.
    pub fn leading(&self, n: usize) -> Result<Self> {
        if n == 0 || n > self.len() {
            return Err(Error::OutOfRange { index: n, len: self.len() });
        }
        Ok(Self {
            diag: self.diag[..n].to_vec(),
            sub: self.sub[..n - 1].to_vec(),
            sup: self.sup[..n - 1].to_vec(),
            pseudo_symmetric: self.pseudo_symmetric,
        })
    }

    /// Reads the three central diagonals of a square matrix.
    pub fn from_dense(m: &Matrix<Cplx<T>>) -> Result<Self> {
        if m.nrows() != m.ncols() || m.nrows() == 0 {
            return Err(Error::Shape(format!("expected a non-empty square matrix, got {}x{}", m.nrows(), m.ncols())));
        }
        let n = m.nrows();
        let diag = (0..n).map(|k| m[(k, k)]).collect();
        let sub = (0..n - 1).map(|k| m[(k + 1, k)]).collect();
        let sup = (0..n - 1).map(|k| m[(k, k + 1)]).collect();
        Self::new(diag, sub, sup)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.diag.iter().chain(&self.sub).chain(&self.sup).fold(T::zero(), |m, z| m.max(z.norm()))
    }
}

/// Dense `n x n` truncation of `op`.
pub fn truncate<T: Real>(op: &TridiagonalOperator<T>, n: usize) -> Result<Matrix<Cplx<T>>> {
    if n == 0 || n > op.len() {
        return Err(Error::OutOfRange { index: n, len: op.len() });
    }
    let mut m = Matrix::zeros(n, n);
    for k in 0..n {
        m[(k, k)] = op.diag[k];
        if k + 1 < n {
            m[(k + 1, k)] = op.sub[k];
            m[(k, k + 1)] = op.sup[k];
        }
    }
    Ok(m)
}

/// Values of the recurrence polynomials at a set of energies.
///
/// `values[n][j]` is `P_n(energies[j])` and `origin_values[n]` is `P_n(0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialTable<T: Real> {
    pub energies: Vec<Cplx<T>>,
    pub values: Vec<Vec<Cplx<T>>>,
    pub origin_values: Vec<Cplx<T>>,
}

impl<T: Real> PolynomialTable<T> {
    /// Highest degree stored.
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, n: usize, e_index: usize) -> Result<Cplx<T>> {
        let row = self.values.get(n).ok_or(Error::OutOfRange { index: n, len: self.values.len() })?;
        row.get(e_index).copied().ok_or(Error::OutOfRange { index: e_index, len: row.len() })
    }
}

/// `P_0 .. P_{n_max}` at one energy by the forward recurrence
/// `E P_n = sub[n-1] P_{n-1} + diag[n] P_n + sup[n] P_{n+1}`.
pub fn recurrence_column<T: Real>(op: &TridiagonalOperator<T>, energy: Cplx<T>, n_max: usize) -> Result<Vec<Cplx<T>>> {
    if n_max >= op.len() {
        return Err(Error::OutOfRange { index: n_max, len: op.len() });
    }
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(Cplx::one());
    for n in 0..n_max {
        let b = op.sup[n];
        if b.is_zero() {
            return Err(Error::NonRegular { index: n });
        }
        let back = if n == 0 { Cplx::zero() } else { op.sub[n - 1] * out[n - 1] };
        out.push(((energy - op.diag[n]) * out[n] - back) / b);
    }
    Ok(out)
}

/// Tabulates `P_n(E_j)` for `n = 0..=n_max`, together with `P_n(0)`.
pub fn recurrence_eval<T: Real>(op: &TridiagonalOperator<T>, energies: &[Cplx<T>], n_max: usize) -> Result<PolynomialTable<T>> {
    let origin_values = recurrence_column(op, Cplx::zero(), n_max)?;
    let columns = energies.iter().map(|&e| recurrence_column(op, e, n_max)).collect::<Result<Vec<_>>>()?;
    let values = (0..=n_max).map(|n| columns.iter().map(|c| c[n]).collect()).collect();
    Ok(PolynomialTable { energies: energies.to_vec(), values, origin_values })
}

/// Kernel polynomial `K_n(E, 0) = sum_{j <= n} P_j(E) P_j(0)`.
pub fn kernel_poly<T: Real>(table: &PolynomialTable<T>, n: usize, e_index: usize) -> Result<Cplx<T>> {
    if n >= table.values.len() || n >= table.origin_values.len() {
        return Err(Error::OutOfRange { index: n, len: table.values.len() });
    }
    if e_index >= table.energies.len() {
        return Err(Error::OutOfRange { index: e_index, len: table.energies.len() });
    }
    let mut acc = Cplx::zero();
    for j in 0..=n {
        acc += table.values[j][e_index] * table.origin_values[j];
    }
    Ok(acc)
}

/// Residual of the three-term identity at row `n` for energy column `j`.
pub fn recurrence_residual<T: Real>(op: &TridiagonalOperator<T>, table: &PolynomialTable<T>, n: usize, j: usize) -> T {
    let e = table.energies[j];
    let p = |k: usize| table.values[k][j];
    let back = if n == 0 { Complex::zero() } else { op.sub[n - 1] * p(n - 1) };
    (e * p(n) - back - op.diag[n] * p(n) - op.sup[n] * p(n + 1)).norm()
}
