//! Helpers shared by the integration tests. Oracles here are written from
//! the definitions and do not call the solver they check.
#![allow(dead_code)]

use num_complex::Complex64;
use qchernoff::classical::DiscreteDistribution;
use qchernoff::linalg::{ComplexMatrix, HermitianMatrix};
use qchernoff::states::{random_density, random_unitary};
use qchernoff::{DensityMatrix, StatePair};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_pair(d: usize, rank0: usize, rank1: usize, seed: u64) -> StatePair {
    StatePair::new(
        random_density(d, rank0, seed.wrapping_mul(2)).unwrap(),
        random_density(d, rank1, seed.wrapping_mul(2).wrapping_add(1)).unwrap(),
    )
    .unwrap()
}

pub fn random_vector(d: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..d)
        .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

/// Pair diagonal in a shared random basis; returns the eigenvalue lists too.
pub fn commuting_pair(d: usize, seed: u64) -> (StatePair, Vec<f64>, Vec<f64>) {
    let mut r = rng(seed);
    let u = random_unitary(d, &mut r);
    let a = simplex(d, &mut r);
    let b = simplex(d, &mut r);
    let rho0 = DensityMatrix::from_diagonal(&a).unwrap().conjugate(&u).unwrap();
    let rho1 = DensityMatrix::from_diagonal(&b).unwrap().conjugate(&u).unwrap();
    (StatePair::new(rho0, rho1).unwrap(), a, b)
}

pub fn simplex(m: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let raw: Vec<f64> = (0..m).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / total).collect()
}

/// Random distribution on `m` letters with each coordinate zeroed with
/// probability `zero_prob` (at least one letter survives).
pub fn sparse_distribution(m: usize, zero_prob: f64, rng: &mut ChaCha8Rng) -> DiscreteDistribution {
    loop {
        let w: Vec<f64> = simplex(m, rng)
            .into_iter()
            .map(|x| if rng.random::<f64>() < zero_prob { 0.0 } else { x })
            .collect();
        if w.iter().any(|&x| x > 0.0) {
            return DiscreteDistribution::from_weights(&w).unwrap();
        }
    }
}

/// `log Σ_{x: p₀,p₁>0} p₀^{1−s} p₁^s`, evaluated directly.
pub fn log_affinity(p0: &[f64], p1: &[f64], s: f64) -> f64 {
    p0.iter()
        .zip(p1)
        .filter(|(a, b)| **a > 0.0 && **b > 0.0)
        .map(|(a, b)| a.powf(1.0 - s) * b.powf(s))
        .sum::<f64>()
        .ln()
}

/// `min{0, log P₀(B), log P₁(B), H(k/G) : 0 < k < G}`; with `refine`, also a
/// ternary search in the cells around the best grid point (H is convex).
pub fn chernoff_grid_oracle(p0: &[f64], p1: &[f64], g: usize, refine: bool) -> f64 {
    let common: Vec<usize> = (0..p0.len()).filter(|&x| p0[x] > 0.0 && p1[x] > 0.0).collect();
    if common.is_empty() {
        return f64::NEG_INFINITY;
    }
    let l0 = common.iter().map(|&x| p0[x]).sum::<f64>().ln();
    let l1 = common.iter().map(|&x| p1[x]).sum::<f64>().ln();
    let mut best = 0f64.min(l0).min(l1);
    let mut best_k = 0;
    let mut best_grid = f64::INFINITY;
    for k in 1..g {
        let v = log_affinity(p0, p1, k as f64 / g as f64);
        if v < best_grid {
            best_grid = v;
            best_k = k;
        }
    }
    best = best.min(best_grid);
    if !refine {
        return best;
    }
    let (mut lo, mut hi) = ((best_k - 1) as f64 / g as f64, (best_k + 1) as f64 / g as f64);
    for _ in 0..200 {
        let a = lo + (hi - lo) / 3.0;
        let b = hi - (hi - lo) / 3.0;
        if log_affinity(p0, p1, a) <= log_affinity(p0, p1, b) {
            hi = b;
        } else {
            lo = a;
        }
    }
    let mid = 0.5 * (lo + hi);
    if mid > 0.0 && mid < 1.0 {
        best = best.min(log_affinity(p0, p1, mid));
    }
    best
}

/// Dense Kronecker power written out index by index.
pub fn kron_power(m: &ComplexMatrix, n: usize) -> ComplexMatrix {
    let d = m.rows();
    let dim = d.pow(n as u32);
    let mut out = ComplexMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            let (mut a, mut b) = (i, j);
            let mut z = Complex64::new(1.0, 0.0);
            for _ in 0..n {
                z *= m[(a % d, b % d)];
                a /= d;
                b /= d;
            }
            out[(i, j)] = z;
        }
    }
    out
}

pub fn hermitian(m: ComplexMatrix) -> HermitianMatrix {
    HermitianMatrix::new(m).unwrap()
}

/// Hermitian matrix with entries uniform in `[-1, 1] + i[-1, 1]`.
pub fn random_hermitian(d: usize, rng: &mut ChaCha8Rng) -> HermitianMatrix {
    let data = (0..d * d)
        .map(|_| Complex64::new(2.0 * rng.random::<f64>() - 1.0, 2.0 * rng.random::<f64>() - 1.0))
        .collect();
    HermitianMatrix::new(ComplexMatrix::new(d, d, data).unwrap()).unwrap()
}

pub fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let data = (0..rows * cols)
        .map(|_| Complex64::new(2.0 * rng.random::<f64>() - 1.0, 2.0 * rng.random::<f64>() - 1.0))
        .collect();
    ComplexMatrix::new(rows, cols, data).unwrap()
}

/// Proptest settings: fixed seed, no on-disk failure persistence.
pub fn proptest_config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        failure_persistence: None,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed),
        ..proptest::test_runner::Config::default()
    }
}
