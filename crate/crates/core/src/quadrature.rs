//! Gauss-Hermite quadrature in the oscillator basis
//! `psi_n(x) = A_n e^{-lambda^2 x^2 / 2} H_n(lambda x)`, `A_n = sqrt(lambda / (2^n n! sqrt(pi)))`.

use num_complex::Complex;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{cmp_real, idx, re, Cplx, Real};
use crate::tridiag::{classify, eigenvalues, Classification, Matrix};

/// Residual tolerance used for the eigenpairs of a scan.
pub const SCAN_RESIDUAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteBasis<T: Real> {
    pub lambda: T,
    pub n: usize,
}

impl<T: Real> HermiteBasis<T> {
    pub fn new(lambda: T, n: usize) -> Result<Self> {
        if !(lambda > T::zero()) || !lambda.is_finite() {
            return Err(Error::InvalidParameter(format!("basis scale must be positive, got {lambda}")));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("basis size must be positive".into()));
        }
        Ok(Self { lambda, n })
    }

    /// Normalized basis function `psi_k(x)`.
    pub fn psi(&self, k: usize, x: T) -> T {
        let y = self.lambda * x;
        let scale = self.lambda.sqrt() * (-y * y / re::<T>(2.0)).exp();
        orthonormal_hermite(y, k + 1)[k] * scale
    }
}

/// Orthonormal Hermite polynomials `p_0..p_{len-1}` at `y` for the weight `e^{-y^2}`.
fn orthonormal_hermite<T: Real>(y: T, len: usize) -> Vec<T> {
    let mut p = Vec::with_capacity(len);
    p.push(T::PI().powf(re::<T>(-0.25)));
    if len > 1 {
        p.push(T::SQRT_2() * y * p[0]);
    }
    for k in 1..len.saturating_sub(1) {
        let kf = idx::<T>(k);
        let next = (re::<T>(2.0) / (kf + T::one())).sqrt() * y * p[k] - (kf / (kf + T::one())).sqrt() * p[k - 1];
        p.push(next);
    }
    p
}

/// Nodes `x_mu` and transform `Gamma[n][mu]` of an oscillator basis.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule<T: Real> {
    pub nodes: Vec<T>,
    /// Row-major `N x N`, `transform[(n, mu)]`.
    pub transform: Matrix<T>,
}

/// Gauss-Hermite nodes (increasing) and weights for the weight `e^{-y^2}`.
///
/// Eigenvalues of the Jacobi matrix with off-diagonal `sqrt(k/2)` by implicit QL,
/// tracking only the first eigenvector components. The rule is symmetrized so that
/// nodes are exactly odd and weights exactly even under `mu -> N-1-mu`.
pub fn golub_welsch<T: Real>(n: usize) -> Result<(Vec<T>, Vec<T>)> {
    if n == 0 {
        return Err(Error::InvalidParameter("quadrature needs at least one node".into()));
    }
    let mut d = vec![T::zero(); n];
    let mut e: Vec<T> = (1..=n).map(|k| if k < n { (idx::<T>(k) / re::<T>(2.0)).sqrt() } else { T::zero() }).collect();
    let mut z = vec![T::zero(); n];
    z[0] = T::one();
    symmetric_ql(&mut d, &mut e, &mut z)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| cmp_real(&d[a], &d[b]));
    let raw_nodes: Vec<T> = order.iter().map(|&k| d[k]).collect();
    let raw_weights: Vec<T> = order.iter().map(|&k| T::PI().sqrt() * z[k] * z[k]).collect();
    let half = re::<T>(0.5);
    let nodes = (0..n).map(|k| (raw_nodes[k] - raw_nodes[n - 1 - k]) * half).collect();
    let weights = (0..n).map(|k| (raw_weights[k] + raw_weights[n - 1 - k]) * half).collect();
    Ok((nodes, weights))
}

/// Implicit QL with Wilkinson-style shifts on a real symmetric tridiagonal matrix.
///
/// `e[k]` couples rows `k` and `k+1`; `e[n-1]` is scratch. `z` holds one row of the
/// eigenvector matrix and is rotated along.
fn symmetric_ql<T: Real>(d: &mut [T], e: &mut [T], z: &mut [T]) -> Result<()> {
    let n = d.len();
    let eps = T::eps();
    let two = re::<T>(2.0);
    let limit = 30 * n.max(1);
    let mut sweeps = 0;
    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > limit {
                return Err(Error::NoConvergence { iterations: sweeps, found: l, n, partial: vec![] });
            }
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + if g >= T::zero() { r } else { -r });
            let (mut s, mut c, mut p) = (T::one(), T::one(), T::zero());
            let mut early = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] -= p;
                    e[m] = T::zero();
                    early = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if early {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    Ok(())
}

/// Nodes `x_mu = y_mu / lambda` and `Gamma[n][mu] = sqrt(w_mu) e^{y_mu^2/2} psi_n(x_mu) / sqrt(lambda)`.
///
/// `Gamma` is evaluated as `p_n(y_mu) / sqrt(sum_k p_k(y_mu)^2)` with `p_k` the orthonormal
/// Hermite polynomials, which is the same quantity (Christoffel form of the weights)
/// without the overflow of `e^{y^2/2}`.
pub fn basis_rule<T: Real>(basis: &HermiteBasis<T>) -> Result<QuadratureRule<T>> {
    let n = basis.n;
    let (y, _) = golub_welsch::<T>(n)?;
    let mut transform = Matrix::zeros(n, n);
    for (mu, &ym) in y.iter().enumerate() {
        let p = orthonormal_hermite(ym, n);
        let norm = p.iter().map(|v| *v * *v).sum::<T>().sqrt();
        for k in 0..n {
            transform[(k, mu)] = p[k] / norm;
        }
    }
    Ok(QuadratureRule { nodes: y.iter().map(|&v| v / basis.lambda).collect(), transform })
}

/// `S_nm = sum_mu Gamma[n][mu] S(x_mu) Gamma[m][mu]`, complex symmetric.
pub fn potential_matrix<T: Real>(s: impl Fn(T) -> Cplx<T>, rule: &QuadratureRule<T>) -> Result<Matrix<Cplx<T>>> {
    let n = rule.nodes.len();
    let values = rule
        .nodes
        .iter()
        .enumerate()
        .map(|(index, &x)| {
            let v = s(x);
            if v.re.is_finite() && v.im.is_finite() {
                Ok(v)
            } else {
                Err(Error::NonFinite { index, x: x.to_f64().unwrap_or(f64::NAN) })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let g = &rule.transform;
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let mut acc = Cplx::<T>::zero();
            for (mu, v) in values.iter().enumerate() {
                acc += *v * (g[(i, mu)] * g[(j, mu)]);
            }
            out[(i, j)] = acc;
            out[(j, i)] = acc;
        }
    }
    Ok(out)
}

/// Matrix of `-1/2 d^2/dx^2` in the oscillator basis.
pub fn kinetic_matrix<T: Real>(basis: &HermiteBasis<T>) -> Matrix<T> {
    let l2 = basis.lambda * basis.lambda / re::<T>(4.0);
    Matrix::from_fn(basis.n, basis.n, |i, j| {
        let lo = i.min(j);
        if i == j {
            l2 * (re::<T>(2.0) * idx::<T>(i) + T::one())
        } else if i.abs_diff(j) == 2 {
            -l2 * (idx::<T>((lo + 1) * (lo + 2))).sqrt()
        } else {
            T::zero()
        }
    })
}

/// `T + V` in the oscillator basis.
pub fn hamiltonian<T: Real>(v: impl Fn(T) -> Cplx<T>, basis: &HermiteBasis<T>) -> Result<Matrix<Cplx<T>>> {
    let rule = basis_rule(basis)?;
    let pot = potential_matrix(v, &rule)?;
    let kin = kinetic_matrix(basis);
    Ok(Matrix::from_fn(basis.n, basis.n, |i, j| pot[(i, j)] + Complex::new(kin[(i, j)], T::zero())))
}

/// Classification of one scan point; `error` is set when the eigensolver failed.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRecord<T: Real> {
    pub lambda: T,
    pub classification: Option<Classification>,
    pub max_imag: Option<T>,
    pub error: Option<Error>,
}

/// Spectrum classification of `T + V` over a list of basis scales, in parallel.
///
/// `imag_tol` is relative to the spectral radius. Failures are recorded per point.
pub fn reality_scan<T: Real>(v: impl Fn(T) -> Cplx<T> + Sync, lambdas: &[T], n: usize, imag_tol: T) -> Vec<ScanRecord<T>> {
    lambdas
        .par_iter()
        .map(|&lambda| {
            let outcome =
                HermiteBasis::new(lambda, n).and_then(|b| hamiltonian(&v, &b)).and_then(|h| eigenvalues(&h, re::<T>(SCAN_RESIDUAL_TOL)));
            match outcome {
                Ok(report) => {
                    ScanRecord { lambda, classification: Some(classify(&report, imag_tol)), max_imag: Some(report.max_imag()), error: None }
                }
                Err(e) => ScanRecord { lambda, classification: None, max_imag: None, error: Some(e) },
            }
        })
        .collect()
}
