//! Exact minimal Bayes error of n i.i.d. observations by type classes.
//!
//! Every string in a type class (count vector `k`, `Σ k = n`) has the same
//! likelihoods `Π p[x]^{k_x}`, so
//! `Δ(P₀ⁿ, P₁ⁿ) = Σ_k multinomial(n; k) · min(w₀ Π p₀^k, w₁ Π p₁^k)`.
//! Terms are formed in log space and summed in a fixed order with
//! compensated summation.

use super::{check_sizes, DiscreteDistribution, Priors};
use crate::error::{Error, Result};

/// Default cap on the number of type classes visited.
pub const MAX_TYPE_CLASSES: u128 = 20_000_000;

/// Number of count vectors of length `m` summing to `n`: `C(n+m−1, m−1)`.
pub fn type_class_count(n: usize, m: usize) -> u128 {
    if m == 0 {
        return u128::from(n == 0);
    }
    let k = (m - 1).min(n) as u128;
    let top = (n + m - 1) as u128;
    let mut c: u128 = 1;
    for i in 0..k {
        c = match c.checked_mul(top - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    c
}

struct Enumerator<'a> {
    n: usize,
    log_fact: Vec<f64>,
    log_p0: &'a [f64],
    log_p1: &'a [f64],
    log_w0: f64,
    log_w1: f64,
}

impl Enumerator<'_> {
    /// Visits every type class in lexicographic order, passing the log term.
    fn walk<F: FnMut(f64)>(&self, visit: &mut F) {
        let m = self.log_p0.len();
        self.recurse(0, self.n, self.log_fact[self.n], self.log_w0, self.log_w1, m, visit);
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse<F: FnMut(f64)>(&self, atom: usize, left: usize, lm: f64, la: f64, lb: f64, m: usize, visit: &mut F) {
        if atom + 1 == m {
            let (la, lb) = (
                add_count(la, left, self.log_p0[atom]),
                add_count(lb, left, self.log_p1[atom]),
            );
            visit(lm - self.log_fact[left] + la.min(lb));
            return;
        }
        for k in (0..=left).rev() {
            let la2 = add_count(la, k, self.log_p0[atom]);
            let lb2 = add_count(lb, k, self.log_p1[atom]);
            if la2 == f64::NEG_INFINITY && lb2 == f64::NEG_INFINITY {
                continue;
            }
            self.recurse(atom + 1, left - k, lm - self.log_fact[k], la2, lb2, m, visit);
        }
    }
}

#[inline]
fn add_count(acc: f64, k: usize, log_p: f64) -> f64 {
    if k == 0 {
        acc
    } else {
        acc + k as f64 * log_p
    }
}

/// `log Δ(P₀ⁿ, P₁ⁿ)`; `-∞` when the error is exactly zero.
pub fn log_product_min_error(
    p0: &DiscreteDistribution,
    p1: &DiscreteDistribution,
    n: usize,
    priors: Priors,
) -> Result<f64> {
    product_log_with_cap(p0, p1, n, priors, MAX_TYPE_CLASSES)
}

pub fn product_min_error(
    p0: &DiscreteDistribution,
    p1: &DiscreteDistribution,
    n: usize,
    priors: Priors,
) -> Result<f64> {
    log_product_min_error(p0, p1, n, priors).map(f64::exp)
}

pub fn product_min_error_with_cap(
    p0: &DiscreteDistribution,
    p1: &DiscreteDistribution,
    n: usize,
    priors: Priors,
    cap: u128,
) -> Result<f64> {
    product_log_with_cap(p0, p1, n, priors, cap).map(f64::exp)
}

fn product_log_with_cap(
    p0: &DiscreteDistribution,
    p1: &DiscreteDistribution,
    n: usize,
    priors: Priors,
    cap: u128,
) -> Result<f64> {
    check_sizes(p0, p1)?;
    if n == 0 {
        return Err(Error::invalid("number of observations must be at least 1"));
    }
    // atoms outside both supports never contribute
    let atoms: Vec<usize> = (0..p0.len())
        .filter(|&x| p0.probs()[x] > 0.0 || p1.probs()[x] > 0.0)
        .collect();
    let classes = type_class_count(n, atoms.len());
    if classes > cap {
        return Err(Error::SizeCap {
            what: "type classes",
            requested: classes,
            cap,
        });
    }
    let ln = |p: f64| if p > 0.0 { p.ln() } else { f64::NEG_INFINITY };
    let log_p0: Vec<f64> = atoms.iter().map(|&x| ln(p0.probs()[x])).collect();
    let log_p1: Vec<f64> = atoms.iter().map(|&x| ln(p1.probs()[x])).collect();
    let mut log_fact = vec![0.0; n + 1];
    for k in 1..=n {
        log_fact[k] = log_fact[k - 1] + (k as f64).ln();
    }
    let walker = Enumerator {
        n,
        log_fact,
        log_p0: &log_p0,
        log_p1: &log_p1,
        log_w0: ln(priors.w0()),
        log_w1: ln(priors.w1()),
    };

    let mut peak = f64::NEG_INFINITY;
    walker.walk(&mut |t| peak = peak.max(t));
    if peak == f64::NEG_INFINITY {
        return Ok(f64::NEG_INFINITY);
    }
    // Neumaier summation of exp(t − peak)
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    walker.walk(&mut |t| {
        let x = (t - peak).exp();
        let s = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - s) + x;
        } else {
            comp += (x - s) + sum;
        }
        sum = s;
    });
    Ok(peak + (sum + comp).ln())
}
