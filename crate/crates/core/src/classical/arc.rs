//! The Hellinger arc `p_s ∝ p₀^{1−s} p₁^s` on the common support `B`, its
//! log-normalizer `H(s) = log A(s)` and the first two derivatives.
//!
//! On `B` everything is an exponential family in the log-likelihood ratio
//! `ℓ = log(p₁/p₀)`: `H' = E_s ℓ` and `H'' = Var_s ℓ`. The same formulas at
//! `s = 0` and `s = 1` give the one-sided limits `log P₀(B)`, `log P₁(B)` and
//! the limiting slopes.

use super::{check_sizes, DiscreteDistribution};
use crate::error::{Error, Result};

/// Arc density at an interior parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcPoint {
    pub s: f64,
    /// Normalizer `A(s) = Σ_B p₀^{1−s} p₁^s`.
    pub normalizer: f64,
    /// `p_s`, zero outside `B`.
    pub density: DiscreteDistribution,
}

#[derive(Debug, Clone)]
pub struct HellingerArc {
    size: usize,
    common: Vec<usize>,
    log_p0: Vec<f64>,
    log_p1: Vec<f64>,
    llr: Vec<f64>,
}

#[derive(Debug, Clone, Copy)]
struct Moments {
    log_normalizer: f64,
    mean: f64,
    variance: f64,
}

impl HellingerArc {
    pub fn new(p0: &DiscreteDistribution, p1: &DiscreteDistribution) -> Result<Self> {
        check_sizes(p0, p1)?;
        let common: Vec<usize> = (0..p0.len())
            .filter(|&x| p0.probs()[x] > 0.0 && p1.probs()[x] > 0.0)
            .collect();
        let log_p0: Vec<f64> = common.iter().map(|&x| p0.probs()[x].ln()).collect();
        let log_p1: Vec<f64> = common.iter().map(|&x| p1.probs()[x].ln()).collect();
        let llr = log_p1.iter().zip(&log_p0).map(|(a, b)| a - b).collect();
        Ok(HellingerArc {
            size: p0.len(),
            common,
            log_p0,
            log_p1,
            llr,
        })
    }

    /// True when the supports are disjoint.
    pub fn is_empty(&self) -> bool {
        self.common.is_empty()
    }

    /// The common support `B`.
    pub fn common_support(&self) -> &[usize] {
        &self.common
    }

    fn weights(&self, s: f64) -> (f64, Vec<f64>) {
        let t: Vec<f64> = self
            .log_p0
            .iter()
            .zip(&self.log_p1)
            .map(|(a, b)| (1.0 - s) * a + s * b)
            .collect();
        let peak = t.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (peak, t.into_iter().map(|x| (x - peak).exp()).collect())
    }

    /// Moments of `ℓ` under the arc density, valid on the closed interval for
    /// the continuous extension restricted to `B`.
    fn moments(&self, s: f64) -> Moments {
        let (peak, w) = self.weights(s);
        let z: f64 = w.iter().sum();
        let mean = w.iter().zip(&self.llr).map(|(wi, l)| wi * l).sum::<f64>() / z;
        let variance = w
            .iter()
            .zip(&self.llr)
            .map(|(wi, l)| wi * (l - mean) * (l - mean))
            .sum::<f64>()
            / z;
        Moments {
            log_normalizer: peak + z.ln(),
            mean,
            variance,
        }
    }

    fn interior(&self, s: f64) -> Result<()> {
        if !(s > 0.0 && s < 1.0) {
            return Err(Error::Precondition(format!("arc parameter {s} must lie in (0, 1)")));
        }
        if self.is_empty() {
            return Err(Error::EmptyArc);
        }
        Ok(())
    }

    /// `A(s)` with the endpoint convention `A(0) = A(1) = 1`; zero inside
    /// `(0, 1)` when `B` is empty.
    pub fn normalizer(&self, s: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::Precondition(format!("arc parameter {s} must lie in [0, 1]")));
        }
        if s == 0.0 || s == 1.0 {
            return Ok(1.0);
        }
        if self.is_empty() {
            return Ok(0.0);
        }
        Ok(self.moments(s).log_normalizer.exp())
    }

    pub fn point(&self, s: f64) -> Result<ArcPoint> {
        self.interior(s)?;
        Ok(self.point_on_closure(s))
    }

    /// Arc density from the continuous extension, so `s = 0` and `s = 1`
    /// give the conditionals `P₀(·|B)` and `P₁(·|B)`. Requires a nonempty `B`.
    pub(crate) fn point_on_closure(&self, s: f64) -> ArcPoint {
        let (peak, w) = self.weights(s);
        let z: f64 = w.iter().sum();
        let mut probs = vec![0.0; self.size];
        for (&x, wi) in self.common.iter().zip(&w) {
            probs[x] = wi / z;
        }
        let total: f64 = probs.iter().sum();
        for p in probs.iter_mut() {
            *p /= total;
        }
        ArcPoint {
            s,
            normalizer: (peak + z.ln()).exp(),
            density: DiscreteDistribution::new(probs).expect("normalized arc density"),
        }
    }

    /// `H(s) = log A(s)` on `(0, 1)`.
    pub fn log_normalizer(&self, s: f64) -> Result<f64> {
        self.interior(s)?;
        Ok(self.moments(s).log_normalizer)
    }

    /// `H'(s) = E_s log(p₁/p₀)`.
    pub fn slope(&self, s: f64) -> Result<f64> {
        self.interior(s)?;
        Ok(self.moments(s).mean)
    }

    /// `H''(s) = Var_s log(p₁/p₀) ≥ 0`.
    pub fn curvature(&self, s: f64) -> Result<f64> {
        self.interior(s)?;
        Ok(self.moments(s).variance)
    }

    /// `(γ₀, γ₁) = (H − sH', H + (1−s)H')`.
    pub fn gammas(&self, s: f64) -> Result<(f64, f64)> {
        self.interior(s)?;
        let m = self.moments(s);
        Ok((m.log_normalizer - s * m.mean, m.log_normalizer + (1.0 - s) * m.mean))
    }

    /// `H` on the closed interval, continuously extended from `(0, 1)`:
    /// `log P₀(B)` at 0 and `log P₁(B)` at 1. `-∞` when `B` is empty.
    pub fn extended_log_normalizer(&self, s: f64) -> f64 {
        if self.is_empty() {
            return f64::NEG_INFINITY;
        }
        self.moments(s).log_normalizer
    }

    pub(crate) fn extended_slope(&self, s: f64) -> f64 {
        self.moments(s).mean
    }

    pub(crate) fn extended_curvature(&self, s: f64) -> f64 {
        self.moments(s).variance
    }

    /// `H₊(0) = log P₀(B)`.
    pub fn limit_at_zero(&self) -> f64 {
        self.extended_log_normalizer(0.0)
    }

    /// `H₋(1) = log P₁(B)`.
    pub fn limit_at_one(&self) -> f64 {
        self.extended_log_normalizer(1.0)
    }

    /// `H'₊(0) = E_{P₀(·|B)} log(p₁/p₀)`; finite on a finite alphabet.
    pub fn slope_limit_at_zero(&self) -> Result<f64> {
        if self.is_empty() {
            return Err(Error::EmptyArc);
        }
        Ok(self.extended_slope(0.0))
    }

    /// `H'₋(1) = E_{P₁(·|B)} log(p₁/p₀)`.
    pub fn slope_limit_at_one(&self) -> Result<f64> {
        if self.is_empty() {
            return Err(Error::EmptyArc);
        }
        Ok(self.extended_slope(1.0))
    }
}

/// `A(s)` for a pair of distributions.
pub fn arc_normalizer(p0: &DiscreteDistribution, p1: &DiscreteDistribution, s: f64) -> Result<f64> {
    HellingerArc::new(p0, p1)?.normalizer(s)
}

pub fn arc_point(p0: &DiscreteDistribution, p1: &DiscreteDistribution, s: f64) -> Result<ArcPoint> {
    HellingerArc::new(p0, p1)?.point(s)
}
