//! JSON reports for the `qcb`, `error`, `nsmap` and `classical` subcommands.

use serde::Serialize;

use crate::classical::{
    chernoff, chernoff_kl_form, log_product_min_error, min_error, sigma_characterization, ChernoffCase,
    DiscreteDistribution, Priors,
};
use crate::error::Result;
use crate::io::{reals, Real};
use crate::nsmap::{interior_grid, ns_chernoff_identity_check, ns_distributions};
use crate::quantum::{bayes_error_quantum, helstrom_test, min_error_exact, qcb, repeated_measurement_upper};
use crate::states::StatePair;

/// Largest n-copy dimension for which `error` also builds the Helstrom
/// projection (a full eigendecomposition) and re-evaluates its error.
pub const HELSTROM_CHECK_DIM: usize = 256;

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

#[derive(Debug, Clone, Serialize)]
pub struct QcbReport {
    pub dim: usize,
    pub bound: Real,
    pub minimizer: String,
    pub case: &'static str,
    pub a_hat_min: Real,
    pub limit_at_zero: Real,
    pub limit_at_one: Real,
    /// Largest gap between the embedded-pair affinity and the matrix trace
    /// `Tr[ρ₀^{1−s} ρ₁^s]` over the interior grid.
    pub identity_residual: Real,
    pub grid_points: usize,
}

impl QcbReport {
    pub fn to_json(&self) -> Result<String> {
        to_json(self)
    }
}

pub fn run_qcb(pair: &StatePair, grid: usize) -> Result<QcbReport> {
    let q = qcb(pair)?;
    let residual = ns_chernoff_identity_check(pair, &interior_grid(grid))?;
    Ok(QcbReport {
        dim: pair.dim(),
        bound: Real(q.bound),
        minimizer: q.minimizer.label(),
        case: q.case.tag(),
        a_hat_min: Real(q.a_hat_min),
        limit_at_zero: Real(q.limit_at_zero),
        limit_at_one: Real(q.limit_at_one),
        identity_residual: Real(residual),
        grid_points: grid,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorReport {
    pub n: usize,
    pub dim: usize,
    pub err_exact: Real,
    /// `½ Δ(Pⁿ, Qⁿ)` of the embedded pair.
    pub error_floor: Real,
    pub repeated_upper: Real,
    /// Error of the explicit Helstrom projection, when the dimension allows.
    pub helstrom_err: Option<Real>,
    pub helstrom_residual: Option<Real>,
    /// `max(floor − err_exact, err_exact − repeated_upper, 0)`.
    pub sandwich_violation: Real,
}

impl ErrorReport {
    pub fn to_json(&self) -> Result<String> {
        to_json(self)
    }
}

pub fn run_error(pair: &StatePair, n: usize) -> Result<ErrorReport> {
    let err = min_error_exact(pair, n)?;
    let ns = ns_distributions(pair)?;
    let floor = 0.5 * log_product_min_error(&ns.p, &ns.q, n, Priors::EQUAL)?.exp();
    let upper = repeated_measurement_upper(pair, n)?;
    let dim = pair.dim().pow(n as u32);
    let helstrom = if dim <= HELSTROM_CHECK_DIM {
        Some(bayes_error_quantum(pair, n, &helstrom_test(pair, n)?)?)
    } else {
        None
    };
    Ok(ErrorReport {
        n,
        dim,
        err_exact: Real(err),
        error_floor: Real(floor),
        repeated_upper: Real(upper),
        helstrom_err: helstrom.map(Real),
        helstrom_residual: helstrom.map(|h| Real((h - err).abs())),
        sandwich_violation: Real((floor - err).max(err - upper).max(0.0)),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct NsmapReport {
    pub dim: usize,
    /// Atom `(i, j)` at index `i·d + j`.
    pub p: Vec<Real>,
    pub q: Vec<Real>,
    pub error_floor: Real,
    pub identity_residual: Real,
    pub grid_points: usize,
}

impl NsmapReport {
    pub fn to_json(&self) -> Result<String> {
        to_json(self)
    }
}

pub fn run_nsmap(pair: &StatePair, grid: usize) -> Result<NsmapReport> {
    let ns = ns_distributions(pair)?;
    Ok(NsmapReport {
        dim: pair.dim(),
        p: reals(ns.p.probs()),
        q: reals(ns.q.probs()),
        error_floor: Real(0.5 * min_error(&ns.p, &ns.q, Priors::EQUAL)?),
        identity_residual: Real(ns_chernoff_identity_check(pair, &interior_grid(grid))?),
        grid_points: grid,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ExponentEntry {
    pub n: usize,
    pub log_delta: Real,
    /// `(1/n)·log Δ(P₀ⁿ, P₁ⁿ)`.
    pub exponent: Real,
}

#[derive(Debug, Clone, Serialize)]
pub struct SigmaResiduals {
    pub sigma: Real,
    pub residual0: Real,
    pub residual1: Real,
    pub balance: Real,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassicalReport {
    pub priors: [Real; 2],
    pub delta: Real,
    pub chernoff: Real,
    pub case: &'static str,
    pub minimizer: String,
    /// Variational form; absent when the supports are disjoint.
    pub kl_form: Option<Real>,
    pub exponents: Vec<ExponentEntry>,
    /// Present in case (a) only.
    pub sigma_check: Option<SigmaResiduals>,
}

impl ClassicalReport {
    pub fn to_json(&self) -> Result<String> {
        to_json(self)
    }
}

pub fn run_classical(
    p0: &DiscreteDistribution,
    p1: &DiscreteDistribution,
    priors: Priors,
    n_max: usize,
) -> Result<ClassicalReport> {
    let c = chernoff(p0, p1)?;
    let kl_form = match c.case {
        ChernoffCase::Disjoint => None,
        _ => Some(Real(chernoff_kl_form(p0, p1)?)),
    };
    let sigma_check = match c.case {
        ChernoffCase::A => {
            let s = sigma_characterization(p0, p1)?;
            Some(SigmaResiduals {
                sigma: Real(s.sigma),
                residual0: Real(s.residual0),
                residual1: Real(s.residual1),
                balance: Real(s.balance),
            })
        }
        _ => None,
    };
    let exponents = (1..=n_max)
        .map(|n| {
            let l = log_product_min_error(p0, p1, n, priors)?;
            Ok(ExponentEntry {
                n,
                log_delta: Real(l),
                exponent: Real(l / n as f64),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassicalReport {
        priors: [Real(priors.w0()), Real(priors.w1())],
        delta: Real(min_error(p0, p1, priors)?),
        chernoff: Real(c.value),
        case: c.case.tag(),
        minimizer: c.minimizer.label(),
        kl_form,
        exponents,
        sigma_check,
    })
}
