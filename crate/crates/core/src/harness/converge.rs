//! `(1/n)·log Err_n` for n = 1..n_max, bracketed by the embedded-pair floor
//! and the repeated single-copy measurement.

use crate::classical::{log_product_min_error, DiscreteDistribution, Priors};
use crate::error::{Error, Result};
use crate::io::format_real;
use crate::nsmap::ns_distributions;
use crate::quantum::{min_error_exact, qcb, single_copy_outcome_probabilities};
use crate::states::StatePair;

pub const CSV_HEADER: [&str; 6] = ["n", "err_exact", "exponent", "floor", "upper", "qcb_bound"];
/// Written in place of a value whose computation would exceed a size cap.
pub const SIZE_CAP_MARKER: &str = "size-cap";
/// Log-domain slack of the row invariant.
const ROW_SLACK: f64 = 1e-12;

/// One row of the study; `None` marks a value skipped for exceeding a cap.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub err_exact: Option<f64>,
    /// `(1/n)·log err_exact`.
    pub exponent: Option<f64>,
    /// `(1/n)·log(½ Δ(Pⁿ, Qⁿ))` for the embedded pair.
    pub floor: Option<f64>,
    /// `(1/n)·log` of the repeated-measurement error.
    pub upper: Option<f64>,
    pub qcb_bound: f64,
}

impl ConvergenceRow {
    /// `floor ≤ exponent ≤ upper` up to log-domain rounding.
    pub fn check(&self) -> Result<()> {
        if let (Some(f), Some(e)) = (self.floor, self.exponent) {
            if f > e + ROW_SLACK {
                return Err(Error::Invariant(format!(
                    "n = {}: floor {} above exponent {}",
                    self.n,
                    format_real(f),
                    format_real(e)
                )));
            }
        }
        if let (Some(e), Some(u)) = (self.exponent, self.upper) {
            if e > u + ROW_SLACK {
                return Err(Error::Invariant(format!(
                    "n = {}: exponent {} above upper {}",
                    self.n,
                    format_real(e),
                    format_real(u)
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRun {
    pub rows: Vec<ConvergenceRow>,
    pub qcb_bound: f64,
}

impl ConvergenceRun {
    /// `(n, exponent_n − qcb_bound)` at the largest n with a computed exponent.
    pub fn gap(&self) -> Option<(usize, f64)> {
        self.rows.iter().rev().find_map(|r| {
            r.exponent.map(|e| {
                let gap = if e == self.qcb_bound { 0.0 } else { e - self.qcb_bound };
                (r.n, gap)
            })
        })
    }
}

fn capped<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::SizeCap { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn per_copy(log_value: f64, n: usize) -> f64 {
    log_value / n as f64
}

/// Runs n = 1..n_max in order. Rows whose quantum dimension exceeds the cap
/// keep their classical columns; any row breaking its invariant aborts the run.
pub fn run_converge(pair: &StatePair, n_max: usize) -> Result<ConvergenceRun> {
    if n_max == 0 {
        return Err(Error::invalid("n_max must be at least 1"));
    }
    let bound = qcb(pair)?.bound;
    let ns = ns_distributions(pair)?;
    let (b0, b1) = single_copy_outcome_probabilities(pair)?;
    let measured = if b0 == b1 {
        None
    } else {
        Some((
            DiscreteDistribution::bernoulli(b0)?,
            DiscreteDistribution::bernoulli(b1)?,
        ))
    };

    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let err_exact = capped(min_error_exact(pair, n))?;
        let floor = capped(log_product_min_error(&ns.p, &ns.q, n, Priors::EQUAL))?
            .map(|log_delta| per_copy(0.5f64.ln() + log_delta, n));
        let upper = match &measured {
            Some((m0, m1)) => capped(log_product_min_error(m0, m1, n, Priors::EQUAL))?.map(|l| per_copy(l, n)),
            None => Some(per_copy(0.5f64.ln(), n)),
        };
        let row = ConvergenceRow {
            n,
            err_exact,
            exponent: err_exact.map(|e| per_copy(e.ln(), n)),
            floor,
            upper,
            qcb_bound: bound,
        };
        row.check()?;
        rows.push(row);
    }
    Ok(ConvergenceRun { rows, qcb_bound: bound })
}

/// CSV text with LF endings, followed by a `#` summary line.
pub fn converge_csv(run: &ConvergenceRun) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    let cell = |x: Option<f64>| x.map_or_else(|| SIZE_CAP_MARKER.to_string(), format_real);
    for r in &run.rows {
        w.write_record([
            r.n.to_string(),
            cell(r.err_exact),
            cell(r.exponent),
            cell(r.floor),
            cell(r.upper),
            format_real(r.qcb_bound),
        ])?;
    }
    let mut text =
        String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.into_error()))?).expect("CSV output is ASCII");
    match run.gap() {
        Some((n, gap)) => text.push_str(&format!(
            "# qcb_bound={},gap={},n={}\n",
            format_real(run.qcb_bound),
            format_real(gap),
            n
        )),
        None => text.push_str(&format!(
            "# qcb_bound={},gap={}\n",
            format_real(run.qcb_bound),
            SIZE_CAP_MARKER
        )),
    }
    Ok(text)
}
