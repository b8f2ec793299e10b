//! Classical embedding of a quantum state pair.
//!
//! With `ρ₀ = Σ λ_i |x_i⟩⟨x_i|` and `ρ₁ = Σ γ_j |y_j⟩⟨y_j|`, the distributions
//! `p_{ij} = λ_i |⟨x_i|y_j⟩|²` and `q_{ij} = γ_j |⟨x_i|y_j⟩|²` on `d²` atoms
//! satisfy `Σ p^{1−s} q^s = Tr[ρ₀^{1−s} ρ₁^s]`, and `¼ Σ min(p, q)` bounds the
//! error of every projective test from below.

use crate::classical::{min_error, DiscreteDistribution, Priors};
use crate::error::{Error, Result};
use crate::linalg::frac_power_with;
use crate::states::StatePair;

/// Largest tolerated deviation of an embedded distribution's total mass from 1.
pub const EMBEDDING_MASS_TOLERANCE: f64 = 1e-10;

/// The embedded pair; atom `(i, j)` sits at flat index `i·d + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct NsPair {
    pub p: DiscreteDistribution,
    pub q: DiscreteDistribution,
    dim: usize,
}

impl NsPair {
    /// Dimension `d` of the underlying Hilbert space (the pair lives on `d²` atoms).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn flat_index(&self, i: usize, j: usize) -> usize {
        i * self.dim + j
    }

    pub fn pair_index(&self, k: usize) -> (usize, usize) {
        (k / self.dim, k % self.dim)
    }
}

fn normalized(raw: Vec<f64>) -> Result<DiscreteDistribution> {
    let total: f64 = raw.iter().sum();
    if (total - 1.0).abs() > EMBEDDING_MASS_TOLERANCE {
        return Err(Error::invalid(format!("embedded distribution has mass {total}")));
    }
    DiscreteDistribution::new(raw.into_iter().map(|x| (x / total).min(1.0)).collect())
}

pub fn ns_distributions(pair: &StatePair) -> Result<NsPair> {
    let d = pair.dim();
    let lambda = &pair.spectrum0().eigenvalues;
    let gamma = &pair.spectrum1().eigenvalues;
    let mut p = vec![0.0; d * d];
    let mut q = vec![0.0; d * d];
    for i in 0..d {
        for j in 0..d {
            let ov = pair.overlap(i, j);
            p[i * d + j] = lambda[i] * ov;
            q[i * d + j] = gamma[j] * ov;
        }
    }
    Ok(NsPair {
        p: normalized(p)?,
        q: normalized(q)?,
        dim: d,
    })
}

/// `¼ Σ min(p_{ij}, q_{ij}) = ½ Δ(P, Q)`, a lower bound on `Err(Π)` for every projection Π.
pub fn error_floor(pair: &StatePair) -> Result<f64> {
    let ns = ns_distributions(pair)?;
    Ok(0.5 * min_error(&ns.p, &ns.q, Priors::EQUAL)?)
}

/// `Tr[ρ₀^{1−s} ρ₁^s]` from explicit fractional matrix powers.
pub fn a_hat_direct(pair: &StatePair, s: f64) -> Result<f64> {
    let tol = pair.settings().rank_tol;
    let a = frac_power_with(pair.rho0().matrix(), 1.0 - s, tol)?;
    let b = frac_power_with(pair.rho1().matrix(), s, tol)?;
    a.trace_product(&b)
}

/// `max_s |Σ p^{1−s} q^s − Tr[ρ₀^{1−s} ρ₁^s]|` over the grid.
///
/// The left side is summed over the embedded atoms; the right side goes through
/// matrix fractional powers, so the two share only the eigensolver.
pub fn ns_chernoff_identity_check(pair: &StatePair, s_grid: &[f64]) -> Result<f64> {
    let ns = ns_distributions(pair)?;
    let mut worst = 0.0f64;
    for &s in s_grid {
        if !(s > 0.0 && s < 1.0) {
            return Err(Error::Precondition(format!("grid point {s} outside (0, 1)")));
        }
        let classical: f64 =
            ns.p.probs()
                .iter()
                .zip(ns.q.probs())
                .filter(|(a, b)| **a > 0.0 && **b > 0.0)
                .map(|(a, b)| a.powf(1.0 - s) * b.powf(s))
                .sum();
        worst = worst.max((classical - a_hat_direct(pair, s)?).abs());
    }
    Ok(worst)
}

#[cfg(test)]
/// Cross-check between the embedding's own sum and the cached-spectrum `Â`.
pub(crate) fn ns_vs_a_hat(pair: &StatePair, s: f64) -> Result<f64> {
    let ns = ns_distributions(pair)?;
    let classical: f64 =
        ns.p.probs()
            .iter()
            .zip(ns.q.probs())
            .filter(|(a, b)| **a > 0.0 && **b > 0.0)
            .map(|(a, b)| a.powf(1.0 - s) * b.powf(s))
            .sum();
    Ok((classical - crate::quantum::a_hat(pair, s)?).abs())
}

/// Uniform grid of `points` values strictly inside `(0, 1)`.
pub fn interior_grid(points: usize) -> Vec<f64> {
    (1..=points).map(|k| k as f64 / (points + 1) as f64).collect()
}
