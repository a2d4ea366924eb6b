//! Dense complex eigensolver: Householder reduction to Hessenberg form
//! followed by single-shift QR sweeps to a complex Schur form.

use num_traits::{One, Zero};

use super::dense::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{cmp_real, re, Cplx, Real};

/// QR sweeps allowed without a deflation before the solver gives up.
pub const MAX_QR_SWEEPS_PER_EIGENVALUE: usize = 60;

/// Eigenvalue counts under a conjugate-pair matching tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    pub real: usize,
    pub pairs: usize,
    pub unpaired: usize,
}

/// Spectrum of a dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport<T: Real> {
    /// Sorted by real part, then imaginary part.
    pub eigenvalues: Vec<Cplx<T>>,
    /// `||M v - lambda v|| / (||M||_F ||v||)` for each eigenpair.
    pub residuals: Vec<T>,
    /// Counts at `imag_tol` equal to the solver tolerance.
    pub classification: Classification,
}

impl<T: Real> SpectrumReport<T> {
    pub fn max_residual(&self) -> T {
        self.residuals.iter().fold(T::zero(), |m, &r| m.max(r))
    }

    pub fn spectral_radius(&self) -> T {
        self.eigenvalues.iter().fold(T::zero(), |m, z| m.max(z.norm()))
    }

    pub fn max_imag(&self) -> T {
        self.eigenvalues.iter().fold(T::zero(), |m, z| m.max(z.im.abs()))
    }
}

/// All eigenvalues of a square complex matrix.
///
/// Each eigenpair is checked against `||M v - lambda v|| <= tol ||M||_F ||v||`.
pub fn eigenvalues<T: Real>(m: &Matrix<Cplx<T>>, tol: T) -> Result<SpectrumReport<T>> {
    if !m.is_square() {
        return Err(Error::Shape(format!("eigenvalues of a {}x{} matrix", m.nrows(), m.ncols())));
    }
    if !m.is_finite() {
        return Err(Error::InvalidParameter("matrix has non-finite entries".into()));
    }
    let n = m.nrows();
    if n == 0 {
        return Ok(SpectrumReport { eigenvalues: vec![], residuals: vec![], classification: Classification::default() });
    }
    let (t, z) = schur(m)?;
    let norm = m.frobenius_norm();
    let vectors = schur_eigenvectors(&t, &z);

    let mut pairs: Vec<(Cplx<T>, T)> = (0..n)
        .map(|k| {
            let lambda = t[(k, k)];
            let v = &vectors[k];
            let mv = m.apply(v);
            let r = mv.iter().zip(v).map(|(a, b)| (*a - lambda * *b).norm_sqr()).sum::<T>().sqrt();
            let vn = v.iter().map(|x| x.norm_sqr()).sum::<T>().sqrt();
            let denom = norm * vn;
            (lambda, if denom > T::zero() { r / denom } else { T::zero() })
        })
        .collect();
    pairs.sort_by(|a, b| cmp_real(&a.0.re, &b.0.re).then(cmp_real(&a.0.im, &b.0.im)));

    let eigenvalues: Vec<Cplx<T>> = pairs.iter().map(|p| p.0).collect();
    let residuals: Vec<T> = pairs.iter().map(|p| p.1).collect();
    if let Some((index, r)) = residuals.iter().enumerate().find(|(_, r)| **r > tol) {
        return Err(Error::ResidualTooLarge { index, residual: r.to_f64().unwrap_or(f64::NAN) });
    }
    let mut report = SpectrumReport { eigenvalues, residuals, classification: Classification::default() };
    report.classification = classify(&report, tol);
    Ok(report)
}

/// Splits a spectrum into real eigenvalues, conjugate pairs and leftovers.
///
/// With `scale` the spectral radius, eigenvalues with `|Im| <= imag_tol * scale`
/// are real. The rest are visited in order and matched to the nearest unmatched
/// eigenvalue to their conjugate (ties to the smallest index) if it lies within
/// `imag_tol * scale`.
pub fn classify<T: Real>(report: &SpectrumReport<T>, imag_tol: T) -> Classification {
    let ev = &report.eigenvalues;
    let radius = report.spectral_radius();
    let scale = if radius > T::zero() { radius } else { T::one() };
    let cut = imag_tol * scale;

    let mut out = Classification::default();
    let mut candidates = Vec::new();
    for (i, z) in ev.iter().enumerate() {
        if z.im.abs() <= cut {
            out.real += 1;
        } else {
            candidates.push(i);
        }
    }
    let mut matched = vec![false; ev.len()];
    for &i in &candidates {
        if matched[i] {
            continue;
        }
        matched[i] = true;
        let target = ev[i].conj();
        let mut best: Option<(usize, T)> = None;
        for &j in &candidates {
            if matched[j] {
                continue;
            }
            let d = (ev[j] - target).norm();
            if best.is_none_or(|(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        match best {
            Some((j, d)) if d <= cut => {
                matched[j] = true;
                out.pairs += 1;
            }
            _ => out.unpaired += 1,
        }
    }
    out
}

/// `(T, Z)` or `(H, Q)`: a reduced matrix and the unitary that produced it.
type Reduction<T> = (Matrix<Cplx<T>>, Matrix<Cplx<T>>);

/// Complex Schur decomposition `M = Z T Z^H` with `T` upper triangular.
fn schur<T: Real>(m: &Matrix<Cplx<T>>) -> Result<Reduction<T>> {
    let n = m.nrows();
    let (mut h, mut z) = hessenberg(m);
    let eps = T::eps();
    let hnorm = h.frobenius_norm();
    let tiny = T::min_positive_value() / eps;

    let mut hi = n - 1;
    let mut since_deflation = 0usize;
    let mut sweeps = 0usize;
    while hi > 0 {
        let mut lo = hi;
        while lo > 0 {
            let s = h[(lo, lo)].norm() + h[(lo - 1, lo - 1)].norm();
            let s = if s > T::zero() { s } else { hnorm };
            if h[(lo, lo - 1)].norm() <= (eps * s).max(tiny) {
                h[(lo, lo - 1)] = Cplx::zero();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        since_deflation += 1;
        sweeps += 1;
        if since_deflation > MAX_QR_SWEEPS_PER_EIGENVALUE {
            let partial = (hi + 1..n).map(|k| {
                let v = h[(k, k)];
                (v.re.to_f64().unwrap_or(f64::NAN), v.im.to_f64().unwrap_or(f64::NAN))
            });
            return Err(Error::NoConvergence { iterations: sweeps, found: n - 1 - hi, n, partial: partial.collect() });
        }
        let shift = if since_deflation % 11 == 10 {
            // exceptional shift
            h[(hi, hi)] + Cplx::new(re::<T>(0.75) * h[(hi, hi - 1)].norm(), T::zero())
        } else {
            wilkinson_shift(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };
        qr_sweep(&mut h, &mut z, lo, hi, shift);
    }
    for i in 1..n {
        for j in 0..i {
            h[(i, j)] = Cplx::zero();
        }
    }
    Ok((h, z))
}

/// Eigenvalue of `[[a, b], [c, d]]` closest to `d`.
fn wilkinson_shift<T: Real>(a: Cplx<T>, b: Cplx<T>, c: Cplx<T>, d: Cplx<T>) -> Cplx<T> {
    let half = re::<T>(0.5);
    let mean = (a + d) * half;
    let diff = (a - d) * half;
    let root = (diff * diff + b * c).sqrt();
    let l1 = mean + root;
    let l2 = mean - root;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Rotation `G = [[c, s], [-conj(s), c]]` with real `c` and `G [a; b] = [r; 0]`.
fn givens<T: Real>(a: Cplx<T>, b: Cplx<T>) -> (T, Cplx<T>) {
    let na = a.norm();
    let nb = b.norm();
    if nb == T::zero() {
        return (T::one(), Cplx::zero());
    }
    if na == T::zero() {
        return (T::zero(), b.conj() / nb);
    }
    let r = na.hypot(nb);
    (na / r, (a / na) * b.conj() / r)
}

fn qr_sweep<T: Real>(h: &mut Matrix<Cplx<T>>, z: &mut Matrix<Cplx<T>>, lo: usize, hi: usize, shift: Cplx<T>) {
    let n = h.nrows();
    for k in lo..=hi {
        h[(k, k)] -= shift;
    }
    let mut rotations = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
        let cc = Cplx::new(c, T::zero());
        for j in k..n {
            let x = h[(k, j)];
            let y = h[(k + 1, j)];
            h[(k, j)] = cc * x + s * y;
            h[(k + 1, j)] = -s.conj() * x + cc * y;
        }
        h[(k + 1, k)] = Cplx::zero();
        rotations.push((c, s));
    }
    for (offset, &(c, s)) in rotations.iter().enumerate() {
        let k = lo + offset;
        let cc = Cplx::new(c, T::zero());
        for i in 0..=(k + 1).min(hi) {
            let x = h[(i, k)];
            let y = h[(i, k + 1)];
            h[(i, k)] = x * cc + y * s.conj();
            h[(i, k + 1)] = -x * s + y * cc;
        }
        for i in 0..n {
            let x = z[(i, k)];
            let y = z[(i, k + 1)];
            z[(i, k)] = x * cc + y * s.conj();
            z[(i, k + 1)] = -x * s + y * cc;
        }
    }
    for k in lo..=hi {
        h[(k, k)] += shift;
    }
}

/// Householder reduction `M = Q H Q^H` with `H` upper Hessenberg.
fn hessenberg<T: Real>(m: &Matrix<Cplx<T>>) -> Reduction<T> {
    let n = m.nrows();
    let mut h = m.clone();
    let mut q = Matrix::<Cplx<T>>::identity(n);
    let two = Cplx::new(re::<T>(2.0), T::zero());
    for k in 0..n.saturating_sub(2) {
        let len = n - k - 1;
        let mut v: Vec<Cplx<T>> = (0..len).map(|i| h[(k + 1 + i, k)]).collect();
        let xnorm = v.iter().map(|x| x.norm_sqr()).sum::<T>().sqrt();
        if xnorm == T::zero() {
            continue;
        }
        let phase = if v[0].norm() > T::zero() { v[0] / v[0].norm() } else { Cplx::one() };
        let alpha = -phase * xnorm;
        v[0] -= alpha;
        let vnorm = v.iter().map(|x| x.norm_sqr()).sum::<T>().sqrt();
        if vnorm == T::zero() {
            continue;
        }
        for x in v.iter_mut() {
            *x /= vnorm;
        }
        // left: H <- (I - 2 v v^H) H
        for j in k..n {
            let mut s = Cplx::zero();
            for (i, vi) in v.iter().enumerate() {
                s += vi.conj() * h[(k + 1 + i, j)];
            }
            for (i, vi) in v.iter().enumerate() {
                h[(k + 1 + i, j)] -= two * *vi * s;
            }
        }
        // right: H <- H (I - 2 v v^H), Q <- Q (I - 2 v v^H)
        for mat in [&mut h, &mut q] {
            for i in 0..n {
                let mut s = Cplx::zero();
                for (l, vl) in v.iter().enumerate() {
                    s += mat[(i, k + 1 + l)] * *vl;
                }
                for (l, vl) in v.iter().enumerate() {
                    mat[(i, k + 1 + l)] -= two * s * vl.conj();
                }
            }
        }
        h[(k + 1, k)] = alpha;
        for i in k + 2..n {
            h[(i, k)] = Cplx::zero();
        }
    }
    (h, q)
}

/// Eigenvectors `v_k = Z y_k` from the upper triangular Schur factor.
fn schur_eigenvectors<T: Real>(t: &Matrix<Cplx<T>>, z: &Matrix<Cplx<T>>) -> Vec<Vec<Cplx<T>>> {
    let n = t.nrows();
    let small = (T::eps() * t.frobenius_norm()).max(T::min_positive_value());
    let big = re::<T>(1e100);
    (0..n)
        .map(|k| {
            let lambda = t[(k, k)];
            let mut y = vec![Cplx::<T>::zero(); n];
            y[k] = Cplx::one();
            for j in (0..k).rev() {
                let mut s = Cplx::<T>::zero();
                for i in j + 1..=k {
                    s += t[(j, i)] * y[i];
                }
                let mut d = t[(j, j)] - lambda;
                if d.norm() < small {
                    d = Cplx::new(small, T::zero());
                }
                y[j] = -s / d;
                if y[j].norm() > big {
                    let inv = T::one() / y[j].norm();
                    for x in y.iter_mut() {
                        *x *= inv;
                    }
                }
            }
            let v = z.apply(&y);
            let vn = v.iter().map(|x| x.norm_sqr()).sum::<T>().sqrt();
            v.into_iter().map(|x| x / vn).collect()
        })
        .collect()
}
