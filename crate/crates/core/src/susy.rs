//! Supersymmetric partners of tridiagonal operators.
//!
//! An operator `H` is factorized as `H = B A` with `A` upper bidiagonal
//! (`A e_n = c_n e_n + d_n e_{n-1}`) and `B` lower bidiagonal
//! (`B e_n = u_n e_n + v_{n+1} e_{n+1}`). The factorization is anchored at
//! `E = 0`: the zero-energy solution `P_n(0)` of the recurrence fixes the
//! gauge-invariant products `sigma_n = u_n c_n` and `tau_n = v_n d_n`. The
//! partner is `H+ = A B`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{re, Cplx, Real};
use crate::tridiag::{recurrence_column, Matrix, PolynomialTable, TridiagonalOperator};

/// Gauge-invariant products of the bidiagonal factors.
#[derive(Debug, Clone, PartialEq)]
pub struct PartnerCoefficients<T: Real> {
    /// `sigma_n = u_n c_n`
    pub sigma: Vec<Cplx<T>>,
    /// `tau_n = v_n d_n`, with `tau_0 = 0`
    pub tau: Vec<Cplx<T>>,
    /// `P_n(0)` for `n < N`
    pub origin_values: Vec<Cplx<T>>,
}

/// Normalization of the factors; both gauges reproduce `B A = H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gauge {
    /// `v_{n+1}` is the principal square root of `tau_{n+1}`; for a
    /// complex-symmetric `H` this makes `B = A^T`.
    PaperConjugate,
    /// `u_n = 1`.
    Doolittle,
}

impl std::str::FromStr for Gauge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-conjugate" | "paper_conjugate" => Ok(Gauge::PaperConjugate),
            "doolittle" => Ok(Gauge::Doolittle),
            other => Err(Error::InvalidParameter(format!("unknown gauge `{other}`"))),
        }
    }
}

/// Bidiagonal factors of `H = B A`.
///
/// All four sequences have length `N`. `d[0] = 0` and `v[0] = 0` are
/// placeholders so that `tau_n = v[n] d[n]` holds for every `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorizationPair<T: Real> {
    /// Diagonal of `A`.
    pub c: Vec<Cplx<T>>,
    /// Superdiagonal of `A`: entry `(n - 1, n)` is `d[n]`.
    pub d: Vec<Cplx<T>>,
    /// Diagonal of `B`.
    pub u: Vec<Cplx<T>>,
    /// Subdiagonal of `B`: entry `(n, n - 1)` is `v[n]`.
    pub v: Vec<Cplx<T>>,
    pub gauge: Gauge,
}

impl<T: Real> FactorizationPair<T> {
    /// Builds factors from explicit entries. `d[0]` and `v[0]` are ignored.
    pub fn from_parts(c: Vec<Cplx<T>>, mut d: Vec<Cplx<T>>, u: Vec<Cplx<T>>, mut v: Vec<Cplx<T>>, gauge: Gauge) -> Result<Self> {
        let n = c.len();
        if n == 0 || d.len() != n || u.len() != n || v.len() != n {
            return Err(Error::Shape(format!(
                "factor sequences must share a non-zero length (c {}, d {}, u {}, v {})",
                n,
                d.len(),
                u.len(),
                v.len()
            )));
        }
        d[0] = Cplx::zero();
        v[0] = Cplx::zero();
        Ok(Self { c, d, u, v, gauge })
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    /// Dense upper bidiagonal `A`.
    pub fn a_matrix(&self) -> Matrix<Cplx<T>> {
        let n = self.len();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                self.c[i]
            } else if j == i + 1 {
                self.d[j]
            } else {
                Cplx::zero()
            }
        })
    }

    /// Dense lower bidiagonal `B`.
    pub fn b_matrix(&self) -> Matrix<Cplx<T>> {
        let n = self.len();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                self.u[i]
            } else if i == j + 1 {
                self.v[i]
            } else {
                Cplx::zero()
            }
        })
    }

    /// Tridiagonal operator `B A`.
    pub fn compose(&self) -> TridiagonalOperator<T> {
        let n = self.len();
        let diag = (0..n).map(|k| self.u[k] * self.c[k] + self.v[k] * self.d[k]).collect();
        let sub = (0..n - 1).map(|k| self.v[k + 1] * self.c[k]).collect();
        let sup = (0..n - 1).map(|k| self.u[k] * self.d[k + 1]).collect();
        TridiagonalOperator::new(diag, sub, sup).expect("consistent factor lengths")
    }
}

/// `P_n(0)` with a cancellation check: a value that is tiny compared to the
/// terms that produced it counts as a zero-energy node.
fn origin_values<T: Real>(op: &TridiagonalOperator<T>) -> Result<Vec<Cplx<T>>> {
    let n = op.len();
    let p = recurrence_column(op, Cplx::zero(), n - 1)?;
    let tol = re::<T>(1e-14);
    for k in 1..n {
        let back = if k >= 2 { (op.sub()[k - 2] * p[k - 2]).norm() } else { T::zero() };
        let scale = ((op.diag()[k - 1] * p[k - 1]).norm() + back) / op.sup()[k - 1].norm();
        if p[k].norm() <= tol * scale || p[k].is_zero() {
            return Err(Error::ZeroEnergyNode { index: k });
        }
    }
    Ok(p)
}

/// Factor products from consecutive zero-energy values:
/// `sigma_n = -sup_n P_{n+1}(0) / P_n(0)`, `tau_n = -sub_{n-1} P_{n-1}(0) / P_n(0)`.
///
/// The last `sigma` closes the truncated recurrence, `sigma_{N-1} = diag_{N-1} - tau_{N-1}`,
/// so it vanishes exactly when `P(0)` is a zero mode of the truncation.
pub fn sigma_tau<T: Real>(op: &TridiagonalOperator<T>) -> Result<PartnerCoefficients<T>> {
    let n = op.len();
    let p = origin_values(op)?;
    let mut tau = vec![Cplx::zero(); n];
    for k in 1..n {
        tau[k] = -op.sub()[k - 1] * p[k - 1] / p[k];
    }
    let mut sigma = Vec::with_capacity(n);
    for k in 0..n - 1 {
        sigma.push(-op.sup()[k] * p[k + 1] / p[k]);
    }
    sigma.push(op.diag()[n - 1] - tau[n - 1]);
    Ok(PartnerCoefficients { sigma, tau, origin_values: p })
}

/// Recovers the bidiagonal factors of `op = B A` in the requested gauge.
pub fn recover_factors<T: Real>(op: &TridiagonalOperator<T>, pc: &PartnerCoefficients<T>, gauge: Gauge) -> Result<FactorizationPair<T>> {
    let n = op.len();
    if pc.sigma.len() != n || pc.tau.len() != n {
        return Err(Error::Shape("partner coefficients do not match the operator length".into()));
    }
    let zero = Cplx::<T>::zero();
    let mut c = vec![zero; n];
    let mut u = vec![zero; n];
    let mut d = vec![zero; n];
    let mut v = vec![zero; n];
    let degenerate = |what: &str, k: usize| Error::DegenerateFactorization(format!("{what} vanishes at index {k}"));

    match gauge {
        Gauge::PaperConjugate => {
            for k in 0..n - 1 {
                v[k + 1] = pc.tau[k + 1].sqrt();
                if v[k + 1].is_zero() {
                    return Err(degenerate("v", k + 1));
                }
                c[k] = op.sub()[k] / v[k + 1];
                if c[k].is_zero() {
                    return Err(degenerate("c", k));
                }
                u[k] = pc.sigma[k] / c[k];
                if u[k].is_zero() {
                    return Err(degenerate("u", k));
                }
                d[k + 1] = op.sup()[k] / u[k];
            }
            let last = pc.sigma[n - 1];
            if !last.is_zero() {
                c[n - 1] = last.sqrt();
                u[n - 1] = last / c[n - 1];
            }
        }
        Gauge::Doolittle => {
            for k in 0..n {
                u[k] = Cplx::one();
                c[k] = pc.sigma[k];
            }
            for k in 0..n - 1 {
                if c[k].is_zero() {
                    return Err(degenerate("c", k));
                }
                d[k + 1] = op.sup()[k];
                v[k + 1] = op.sub()[k] / c[k];
                if v[k + 1].is_zero() {
                    return Err(degenerate("v", k + 1));
                }
            }
        }
    }
    FactorizationPair::from_parts(c, d, u, v, gauge)
}

/// Partner operator `H+ = A B` of length `N`.
///
/// `diag+_n = sigma_n + tau_{n+1}` for `n < N - 1`; the final diagonal entry is
/// `sigma_{N-1}` because `tau_N` lies outside the truncation.
pub fn partner<T: Real>(fp: &FactorizationPair<T>) -> TridiagonalOperator<T> {
    let n = fp.len();
    let diag = (0..n)
        .map(|k| {
            let head = fp.c[k] * fp.u[k];
            if k + 1 < n {
                head + fp.d[k + 1] * fp.v[k + 1]
            } else {
                head
            }
        })
        .collect();
    let sub = (0..n - 1).map(|k| fp.v[k + 1] * fp.c[k + 1]).collect();
    let sup = (0..n - 1).map(|k| fp.u[k + 1] * fp.d[k + 1]).collect();
    TridiagonalOperator::new(diag, sub, sup).expect("consistent factor lengths")
}

/// `sigma_tau`, `recover_factors` and `partner` in one call.
pub fn partner_of<T: Real>(
    op: &TridiagonalOperator<T>,
    gauge: Gauge,
) -> Result<(PartnerCoefficients<T>, FactorizationPair<T>, TridiagonalOperator<T>)> {
    let pc = sigma_tau(op)?;
    let fp = recover_factors(op, &pc, gauge)?;
    let h_plus = partner(&fp);
    Ok((pc, fp, h_plus))
}

/// Symmetrizing weights `w_n = prod_{j<n} sup_j / sub_j` (all ones when `sub = sup`).
fn kernel_weights<T: Real>(op: &TridiagonalOperator<T>, n: usize) -> Result<Vec<Cplx<T>>> {
    let mut w = Vec::with_capacity(n + 1);
    w.push(Cplx::one());
    for j in 0..n {
        let s = op.sub()[j];
        if s.is_zero() {
            return Err(Error::DegenerateFactorization(format!("sub vanishes at index {j}")));
        }
        let next = w[j] * op.sup()[j] / s;
        w.push(next);
    }
    Ok(w)
}

/// Partner polynomials `P+_n(E_j)` from the kernel relation.
///
/// `P+_n(E) = sup_0 d_{n+1} / (d_1 sup_n w_n P_n(0)) * sum_{j<=n} w_j P_j(E) P_j(0)`.
/// For a complex-symmetric operator `w = 1`, the sum is the kernel
/// polynomial `K_n(E, 0)`, and in [`Gauge::PaperConjugate`] the prefactor is a
/// square root of `sub_0 P_1(0) / (sub_n P_n(0) P_{n+1}(0))`; the branch is the
/// one consistent with `partner(fp)`. `P+_0 = 1`.
pub fn partner_polys<T: Real>(
    op: &TridiagonalOperator<T>,
    fp: &FactorizationPair<T>,
    table: &PolynomialTable<T>,
    n: usize,
) -> Result<Vec<Cplx<T>>> {
    if n + 1 >= op.len() || n > table.n_max() {
        return Err(Error::OutOfRange { index: n, len: op.len().min(table.n_max() + 1) });
    }
    let w = kernel_weights(op, n)?;
    let denom = fp.d[1] * op.sup()[n] * w[n] * table.origin_values[n];
    if denom.is_zero() {
        return Err(Error::DegenerateFactorization("kernel prefactor denominator vanishes".into()));
    }
    let prefactor = op.sup()[0] * fp.d[n + 1] / denom;
    Ok((0..table.energies.len())
        .map(|e| {
            let mut k = Cplx::zero();
            for j in 0..=n {
                k += w[j] * table.values[j][e] * table.origin_values[j];
            }
            prefactor * k
        })
        .collect())
}

/// Square of the kernel-relation prefactor, `sub_0 P_1(0) / (sub_n P_n(0) P_{n+1}(0))`.
pub fn kernel_prefactor_squared<T: Real>(op: &TridiagonalOperator<T>, origin: &[Cplx<T>], n: usize) -> Cplx<T> {
    op.sub()[0] * origin[1] / (op.sub()[n] * origin[n] * origin[n + 1])
}

/// Partner potentials `V-(x) = W(x)^2 - W'(x)` and `V+(x) = W(x)^2 + W'(x)`
/// (units with `hbar = sqrt(2m) = 1`), using a central difference of step `h`.
pub fn superpotential_pair<T: Real>(w: impl Fn(T) -> T, x_grid: &[T], h: T) -> Result<(Vec<T>, Vec<T>)> {
    if !(h > T::zero()) {
        return Err(Error::InvalidParameter("finite-difference step must be positive".into()));
    }
    let two = re::<T>(2.0);
    let mut minus = Vec::with_capacity(x_grid.len());
    let mut plus = Vec::with_capacity(x_grid.len());
    for &x in x_grid {
        let wx = w(x);
        let dw = (w(x + h) - w(x - h)) / (two * h);
        minus.push(wx * wx - dw);
        plus.push(wx * wx + dw);
    }
    Ok((minus, plus))
}
