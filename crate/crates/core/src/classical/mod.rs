//! Classical hypothesis testing on a finite alphabet.
//!
//! Supports are decided by exact zeros: an atom with probability `0.0` is
//! outside the support no matter how small its neighbours are. The Chernoff
//! solver handles distributions whose supports differ, where the affinity
//! `A(s) = Σ p₀^{1−s} p₁^s` jumps at the endpoints of `[0, 1]`.

mod arc;
mod chernoff;
mod product;

pub use arc::{arc_normalizer, arc_point, ArcPoint, HellingerArc};
pub use chernoff::{
    chernoff, chernoff_kl_form, sigma_characterization, ChernoffCase, ChernoffResult, Minimizer, SigmaCheck,
    SIGN_TOLERANCE,
};
pub use product::{
    log_product_min_error, product_min_error, product_min_error_with_cap, type_class_count, MAX_TYPE_CLASSES,
};

use crate::error::{Error, Result};

/// Tolerance on `Σ p = 1`.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-12;

/// Probability vector over `{0, …, m−1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    probs: Vec<f64>,
}

impl DiscreteDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::invalid("distribution needs at least one atom"));
        }
        if let Some(bad) = probs.iter().find(|p| !p.is_finite() || **p < 0.0 || **p > 1.0) {
            return Err(Error::invalid(format!("probability {bad} outside [0, 1]")));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::invalid(format!("probabilities sum to {total}, not 1")));
        }
        Ok(DiscreteDistribution { probs })
    }

    /// Normalizes nonnegative weights. Zero weights stay exact zeros.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::invalid("weights must be finite and nonnegative"));
        }
        let total: f64 = weights.iter().sum();
        if total <= 0.0 {
            return Err(Error::invalid("weights sum to zero"));
        }
        Self::new(weights.iter().map(|w| w / total).collect())
    }

    pub fn uniform(m: usize) -> Result<Self> {
        Self::from_weights(&vec![1.0; m])
    }

    /// Bernoulli law on `{0, 1}` with `P(1) = b`.
    pub fn bernoulli(b: f64) -> Result<Self> {
        Self::new(vec![1.0 - b, b])
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.probs[x] > 0.0).collect()
    }

    pub fn mass_of(&self, indices: &[usize]) -> f64 {
        indices.iter().map(|&x| self.probs[x]).sum()
    }
}

/// Prior weights `(w₀, w₁)` of the two hypotheses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Priors {
    w0: f64,
    w1: f64,
}

impl Priors {
    pub const EQUAL: Priors = Priors { w0: 0.5, w1: 0.5 };

    pub fn new(w0: f64, w1: f64) -> Result<Self> {
        if !(w0 >= 0.0 && w1 >= 0.0) || (w0 + w1 - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::invalid(format!(
                "priors ({w0}, {w1}) must be nonnegative and sum to 1"
            )));
        }
        Ok(Priors { w0, w1 })
    }

    pub fn w0(&self) -> f64 {
        self.w0
    }

    pub fn w1(&self) -> f64 {
        self.w1
    }
}

impl Default for Priors {
    fn default() -> Self {
        Priors::EQUAL
    }
}

/// Common support `B` and the two exclusive parts `S₀ = D₀ \ B`, `S₁ = D₁ \ B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportPartition {
    pub common: Vec<usize>,
    pub only0: Vec<usize>,
    pub only1: Vec<usize>,
}

pub(crate) fn check_sizes(p0: &DiscreteDistribution, p1: &DiscreteDistribution) -> Result<()> {
    if p0.len() != p1.len() {
        return Err(Error::DimensionMismatch {
            expected: p0.len(),
            found: p1.len(),
        });
    }
    Ok(())
}

pub fn support_partition(p0: &DiscreteDistribution, p1: &DiscreteDistribution) -> Result<SupportPartition> {
    check_sizes(p0, p1)?;
    let mut part = SupportPartition {
        common: Vec::new(),
        only0: Vec::new(),
        only1: Vec::new(),
    };
    for (x, (&a, &b)) in p0.probs.iter().zip(&p1.probs).enumerate() {
        match (a > 0.0, b > 0.0) {
            (true, true) => part.common.push(x),
            (true, false) => part.only0.push(x),
            (false, true) => part.only1.push(x),
            (false, false) => {}
        }
    }
    Ok(part)
}

/// `w₀ Σ p₀ λ + w₁ Σ p₁ (1 − λ)` for a randomized test `λ ∈ [0,1]^m`
/// (`λ = 1` decides for H₁).
pub fn bayes_error(p0: &DiscreteDistribution, p1: &DiscreteDistribution, test: &[f64], priors: Priors) -> Result<f64> {
    check_sizes(p0, p1)?;
    if test.len() != p0.len() {
        return Err(Error::DimensionMismatch {
            expected: p0.len(),
            found: test.len(),
        });
    }
    const SLACK: f64 = 1e-12;
    if let Some(bad) = test.iter().find(|t| !(**t >= -SLACK && **t <= 1.0 + SLACK)) {
        return Err(Error::invalid(format!("test value {bad} outside [0, 1]")));
    }
    let mut type1 = 0.0;
    let mut type2 = 0.0;
    for ((&a, &b), &t) in p0.probs.iter().zip(&p1.probs).zip(test) {
        let t = t.clamp(0.0, 1.0);
        type1 += a * t;
        type2 += b * (1.0 - t);
    }
    Ok(priors.w0 * type1 + priors.w1 * type2)
}

/// Maximum-likelihood test `1{p₁ > p₀}`; ties go to H₀.
pub fn ml_test(p0: &DiscreteDistribution, p1: &DiscreteDistribution) -> Result<Vec<f64>> {
    check_sizes(p0, p1)?;
    Ok(p0
        .probs
        .iter()
        .zip(&p1.probs)
        .map(|(a, b)| if b > a { 1.0 } else { 0.0 })
        .collect())
}

/// Minimal Bayes error `Σ min(w₀ p₀, w₁ p₁)`.
pub fn min_error(p0: &DiscreteDistribution, p1: &DiscreteDistribution, priors: Priors) -> Result<f64> {
    check_sizes(p0, p1)?;
    Ok(p0
        .probs
        .iter()
        .zip(&p1.probs)
        .map(|(a, b)| (priors.w0 * a).min(priors.w1 * b))
        .sum())
}

/// Relative entropy `K(P‖Q) = Σ_{p>0} p log(p/q)`, `+∞` when `supp P ⊄ supp Q`.
pub fn kl(p: &DiscreteDistribution, q: &DiscreteDistribution) -> Result<f64> {
    check_sizes(p, q)?;
    let mut acc = 0.0;
    for (&a, &b) in p.probs.iter().zip(&q.probs) {
        if a > 0.0 {
            if b == 0.0 {
                return Ok(f64::INFINITY);
            }
            acc += a * (a / b).ln();
        }
    }
    Ok(acc.max(0.0))
}
