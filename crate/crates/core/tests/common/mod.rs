//! Oracles and generators shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use num_complex::Complex64;
use ptsusy::susy::{FactorizationPair, Gauge};
use ptsusy::{CMatrix, Operator};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn rand_c(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> Complex64 {
    let m = r.gen_range(lo..hi);
    let t = r.gen_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(m, t)
}

/// Diagonally dominant complex tridiagonal operator with independent sub/sup.
pub fn random_operator(r: &mut ChaCha8Rng, n: usize) -> Operator {
    let diag = (0..n).map(|_| rand_c(r, 2.0, 4.0)).collect();
    let sub = (0..n - 1).map(|_| rand_c(r, 0.5, 1.0)).collect();
    let sup = (0..n - 1).map(|_| rand_c(r, 0.5, 1.0)).collect();
    Operator::new(diag, sub, sup).unwrap()
}

/// Factors of `H = B A` with `c_{N-1} = 0`, so `H` has an exact zero mode.
/// Entries are close to real so the spectrum is well conditioned.
pub fn zero_mode_factors(r: &mut ChaCha8Rng, n: usize) -> FactorizationPair<f64> {
    let mut cs: Vec<Complex64> = (0..n).map(|k| c(1.0 + 0.05 * k as f64 + r.gen_range(0.0..0.5), r.gen_range(-0.1..0.1))).collect();
    cs[n - 1] = c(0.0, 0.0);
    let mut ds: Vec<Complex64> = (0..n).map(|_| c(r.gen_range(0.5..1.5), r.gen_range(-0.1..0.1))).collect();
    ds[0] = c(0.0, 0.0);
    FactorizationPair::from_parts(cs.clone(), ds.clone(), cs, ds, Gauge::PaperConjugate).unwrap()
}

pub fn random_matrix(r: &mut ChaCha8Rng, n: usize) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| c(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)))
}

/// Relative distance with a floor on the scale.
pub fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

/// Largest distance under a greedy nearest-neighbour matching of two spectra.
pub fn match_spectra(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for x in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, y)| (j, (x - y).norm()))
            .min_by(|p, q| p.1.partial_cmp(&q.1).unwrap())
            .unwrap();
        used[j] = true;
        worst = worst.max(d);
    }
    worst
}

/// Characteristic polynomial coefficients (monic, highest first) by Faddeev-LeVerrier.
pub fn char_poly(m: &CMatrix) -> Vec<Complex64> {
    let n = m.nrows();
    let mut coeffs = vec![c(1.0, 0.0)];
    let mut mk = CMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A (M_{k-1} + c_{k-1} I)
        let prev = CMatrix::from_fn(n, n, |i, j| mk[(i, j)] + if i == j { coeffs[k - 1] } else { c(0.0, 0.0) });
        mk = m.matmul(&prev);
        let trace: Complex64 = (0..n).map(|i| mk[(i, i)]).sum();
        coeffs.push(-trace / k as f64);
    }
    coeffs
}

/// Polynomial roots by Durand-Kerner iteration, polished by Newton steps.
pub fn poly_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let eval = |z: Complex64| coeffs.iter().fold(c(0.0, 0.0), |acc, &a| acc * z + a);
    let deriv = |z: Complex64| coeffs[..n].iter().enumerate().fold(c(0.0, 0.0), |acc, (k, &a)| acc * z + a * (n - k) as f64);
    let seed = c(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let mut denom = c(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let d = deriv(*zi);
            if d.norm() > 0.0 {
                *zi -= eval(*zi) / d;
            }
        }
    }
    z
}

/// `(X^d)_{nm}` for the oscillator-basis position operator, `X_{n,n+1} = sqrt((n+1)/2) / lambda`.
pub fn position_power(lambda: f64, d: usize, n: usize) -> Vec<Vec<f64>> {
    let size = n + d + 1;
    let x = |i: usize, j: usize| {
        if j == i + 1 {
            ((i + 1) as f64 / 2.0).sqrt() / lambda
        } else if i == j + 1 {
            ((j + 1) as f64 / 2.0).sqrt() / lambda
        } else {
            0.0
        }
    };
    let mut p: Vec<Vec<f64>> = (0..size).map(|i| (0..size).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    for _ in 0..d {
        let mut q = vec![vec![0.0; size]; size];
        for i in 0..size {
            for k in 0..size {
                if p[i][k] == 0.0 {
                    continue;
                }
                for j in k.saturating_sub(1)..(k + 2).min(size) {
                    q[i][j] += p[i][k] * x(k, j);
                }
            }
        }
        p = q;
    }
    p.truncate(n);
    p.iter_mut().for_each(|row| row.truncate(n));
    p
}
