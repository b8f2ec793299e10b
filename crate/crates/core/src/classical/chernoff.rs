//! Chernoff information `inf_{s∈[0,1]} log A(s)` with the endpoint case analysis.
//!
//! `H = log A` is convex on `(0, 1)`, so the infimum is decided by the signs
//! of the limiting slopes `H'₊(0)` and `H'₋(1)`:
//!
//! | case | `H'₊(0)` | `H'₋(1)` | infimum            |
//! |------|----------|----------|--------------------|
//! | a    | `< 0`    | `> 0`    | `H(σ)`, `H'(σ)=0`  |
//! | b    | `< 0`    | `≤ 0`    | `log P₁(B)`        |
//! | c    | `≥ 0`    | `> 0`    | `log P₀(B)`        |
//! | d    | `≥ 0`    | `≤ 0`    | `H` constant       |
//!
//! Disjoint supports give `-∞`.

use super::arc::HellingerArc;
use super::{kl, DiscreteDistribution};
use crate::error::{Error, Result};

/// Slopes within this distance of zero count as zero when classifying.
pub const SIGN_TOLERANCE: f64 = 1e-9;
/// Final bracket width of the golden-section search.
pub const GOLDEN_WIDTH: f64 = 1e-10;
/// Grid resolution of the variational (KL) form before local refinement.
pub const KL_FORM_GRID: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChernoffCase {
    A,
    B,
    C,
    D,
    Disjoint,
}

impl ChernoffCase {
    pub fn tag(self) -> &'static str {
        match self {
            ChernoffCase::A => "a",
            ChernoffCase::B => "b",
            ChernoffCase::C => "c",
            ChernoffCase::D => "d",
            ChernoffCase::Disjoint => "disjoint",
        }
    }
}

/// Where the infimum is reached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Minimizer {
    /// Attained at an interior critical point.
    Interior(f64),
    /// Approached as `s ↘ 0`.
    LimitAtZero,
    /// Approached as `s ↗ 1`.
    LimitAtOne,
    /// `H` is constant on `(0, 1)`; every interior point is a minimizer.
    Flat,
    /// Disjoint supports.
    MinusInfinity,
}

impl Minimizer {
    pub fn label(&self) -> String {
        match self {
            Minimizer::Interior(s) => format!("interior:{}", crate::io::format_real(*s)),
            Minimizer::LimitAtZero => "limit-at-0".into(),
            Minimizer::LimitAtOne => "limit-at-1".into(),
            Minimizer::Flat => "interior-flat".into(),
            Minimizer::MinusInfinity => "minus-infinity".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChernoffResult {
    /// `inf_{0≤s≤1} log A(s)`; never positive, `-∞` iff the supports are disjoint.
    pub value: f64,
    pub minimizer: Minimizer,
    /// Interior critical point in case (a).
    pub sigma: Option<f64>,
    pub case: ChernoffCase,
    /// `H'₊(0)` and `H'₋(1)`; NaN for disjoint supports.
    pub slope_at_zero: f64,
    pub slope_at_one: f64,
}

fn golden_section<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, width: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > width {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        x1
    } else {
        x2
    }
}

/// Newton on `H' = 0`, safeguarded by the bracket `H'(lo) < 0 < H'(hi)`.
fn polish_critical_point(arc: &HellingerArc, start: f64) -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut s = start;
    for _ in 0..200 {
        let g = arc.extended_slope(s);
        if g == 0.0 {
            break;
        }
        if g < 0.0 {
            lo = s;
        } else {
            hi = s;
        }
        let c = arc.extended_curvature(s);
        let newton = s - g / c;
        let next = if c > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - s).abs() <= 4.0 * f64::EPSILON * s.max(1e-300) || hi - lo <= 4.0 * f64::EPSILON {
            s = next;
            break;
        }
        s = next;
    }
    s
}

pub fn chernoff(p0: &DiscreteDistribution, p1: &DiscreteDistribution) -> Result<ChernoffResult> {
    let arc = HellingerArc::new(p0, p1)?;
    Ok(chernoff_on_arc(&arc))
}

pub(crate) fn chernoff_on_arc(arc: &HellingerArc) -> ChernoffResult {
    if arc.is_empty() {
        return ChernoffResult {
            value: f64::NEG_INFINITY,
            minimizer: Minimizer::MinusInfinity,
            sigma: None,
            case: ChernoffCase::Disjoint,
            slope_at_zero: f64::NAN,
            slope_at_one: f64::NAN,
        };
    }
    let d0 = arc.extended_slope(0.0);
    let d1 = arc.extended_slope(1.0);
    let falls_at_zero = d0 < -SIGN_TOLERANCE;
    let rises_at_one = d1 > SIGN_TOLERANCE;
    let h = |s: f64| arc.extended_log_normalizer(s);

    let (value, minimizer, sigma, case) = match (falls_at_zero, rises_at_one) {
        (true, true) => {
            let coarse = golden_section(h, 0.0, 1.0, GOLDEN_WIDTH);
            // golden section alone only locates s to about √ε, where H is flat
            // to rounding; the root of H' is the sharper location
            let sigma = polish_critical_point(arc, coarse);
            let value = h(sigma).min(h(coarse));
            (value, Minimizer::Interior(sigma), Some(sigma), ChernoffCase::A)
        }
        (true, false) => (arc.limit_at_one(), Minimizer::LimitAtOne, None, ChernoffCase::B),
        (false, true) => (arc.limit_at_zero(), Minimizer::LimitAtZero, None, ChernoffCase::C),
        (false, false) => (
            arc.limit_at_zero().min(arc.limit_at_one()).min(h(0.5)),
            Minimizer::Flat,
            None,
            ChernoffCase::D,
        ),
    };
    ChernoffResult {
        // `+ 0.0` turns a `-0.0` into `0.0`
        value: value.min(0.0) + 0.0,
        minimizer,
        sigma,
        case,
        slope_at_zero: d0,
        slope_at_one: d1,
    }
}

/// Conditional law `P(·|B)`.
fn conditional(p: &DiscreteDistribution, common: &[usize]) -> Result<(DiscreteDistribution, f64)> {
    let mass = p.mass_of(common);
    let mut w = vec![0.0; p.len()];
    for &x in common {
        w[x] = p.probs()[x];
    }
    Ok((DiscreteDistribution::from_weights(&w)?, mass))
}

/// Chernoff information through relative entropies:
/// `inf_s −(1−s)K(Q_s‖Q₀) − sK(Q_s‖Q₁) + log(β₀^{1−s} β₁^s)` with
/// `Q_i = P_i(·|B)`, `β_i = P_i(B)` and `Q_s` the arc density.
pub fn chernoff_kl_form(p0: &DiscreteDistribution, p1: &DiscreteDistribution) -> Result<f64> {
    let arc = HellingerArc::new(p0, p1)?;
    if arc.is_empty() {
        return Err(Error::EmptyArc);
    }
    let (q0, beta0) = conditional(p0, arc.common_support())?;
    let (q1, beta1) = conditional(p1, arc.common_support())?;
    let (lb0, lb1) = (beta0.ln(), beta1.ln());
    let target = |s: f64| -> f64 {
        let qs = arc.point_on_closure(s).density;
        let k0 = kl(&qs, &q0).expect("same alphabet");
        let k1 = kl(&qs, &q1).expect("same alphabet");
        -(1.0 - s) * k0 - s * k1 + (1.0 - s) * lb0 + s * lb1
    };

    let grid: Vec<f64> = (0..=KL_FORM_GRID)
        .map(|k| target(k as f64 / KL_FORM_GRID as f64))
        .collect();
    let best = (0..grid.len())
        .min_by(|&a, &b| grid[a].total_cmp(&grid[b]))
        .unwrap_or(0);
    let lo = best.saturating_sub(1) as f64 / KL_FORM_GRID as f64;
    let hi = (best + 1).min(KL_FORM_GRID) as f64 / KL_FORM_GRID as f64;
    let refined = golden_section(target, lo, hi, 1e-13);
    Ok(grid[best].min(target(refined)).min(0.0))
}

/// Residuals of the relative-entropy description of the interior optimum.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaCheck {
    pub sigma: f64,
    pub value: f64,
    /// `|δ − (−K(Q_σ‖Q₀) + log β₀)|`
    pub residual0: f64,
    /// `|δ − (−K(Q_σ‖Q₁) + log β₁)|`
    pub residual1: f64,
    /// `|K(Q_σ‖Q₀) − K(Q_σ‖Q₁) − log(β₀/β₁)|`
    pub balance: f64,
}

/// Checks `δ = −K(Q_σ‖Q_i) + log β_i` at the interior critical point σ.
/// Only defined in case (a).
pub fn sigma_characterization(p0: &DiscreteDistribution, p1: &DiscreteDistribution) -> Result<SigmaCheck> {
    let arc = HellingerArc::new(p0, p1)?;
    let res = chernoff_on_arc(&arc);
    let Some(sigma) = res.sigma else {
        return Err(Error::Precondition(format!(
            "no interior critical point (case {})",
            res.case.tag()
        )));
    };
    let (q0, beta0) = conditional(p0, arc.common_support())?;
    let (q1, beta1) = conditional(p1, arc.common_support())?;
    let qs = arc.point_on_closure(sigma).density;
    let k0 = kl(&qs, &q0)?;
    let k1 = kl(&qs, &q1)?;
    Ok(SigmaCheck {
        sigma,
        value: res.value,
        residual0: (res.value - (-k0 + beta0.ln())).abs(),
        residual1: (res.value - (-k1 + beta1.ln())).abs(),
        balance: (k0 - k1 - (beta0 / beta1).ln()).abs(),
    })
}
