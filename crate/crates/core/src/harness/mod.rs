//! Experiment runner behind the `qchernoff` binary: state loading, the
//! convergence study of `(1/n)·log Err_n`, and JSON reports for the other
//! subcommands. All output is deterministic for a fixed configuration.

mod converge;
mod reports;

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

pub use converge::{converge_csv, run_converge, ConvergenceRow, ConvergenceRun, CSV_HEADER, SIZE_CAP_MARKER};
pub use reports::{
    run_classical, run_error, run_nsmap, run_qcb, ClassicalReport, ErrorReport, NsmapReport, QcbReport,
    HELSTROM_CHECK_DIM,
};

use crate::classical::{DiscreteDistribution, Priors};
use crate::error::{Error, Result};
use crate::io::{read_distribution, read_state};
use crate::linalg::{HermitianMatrix, SizeCap, DEFAULT_RANK_TOL};
use crate::settings::Settings;
use crate::states::{random_density, DensityMatrix, StatePair};

/// Default number of copies swept by `converge` and reported by `classical`.
pub const DEFAULT_N_MAX: usize = 10;
/// Default number of interior points in the `s`-grid of identity checks.
pub const DEFAULT_GRID: usize = 101;

/// `d,rank,seed`: ρ₀ is drawn with `seed` and ρ₁ with `seed + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub dim: usize,
    pub rank: usize,
    pub seed: u64,
}

impl FromStr for GenSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || Error::invalid(format!("generator spec must be d,rank,seed; got {s:?}"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let dim: usize = parts[0].parse().map_err(|_| bad())?;
        let rank: usize = parts[1].parse().map_err(|_| bad())?;
        let seed: u64 = parts[2].parse().map_err(|_| bad())?;
        if dim == 0 || rank == 0 || rank > dim {
            return Err(Error::invalid(format!("generator spec needs 1 ≤ rank ≤ d, got {s:?}")));
        }
        Ok(GenSpec { dim, rank, seed })
    }
}

/// Where the two hypotheses come from.
#[derive(Debug, Clone, PartialEq)]
pub enum PairSource {
    /// State files for `converge`, `qcb`, `error`, `nsmap`; distribution files
    /// for `classical`.
    Files {
        state0: PathBuf,
        state1: PathBuf,
    },
    Generated(GenSpec),
    /// `ρ₀ = diag(0.75, 0.25)`, `ρ₁ = [[0.5, 0.25], [0.25, 0.5]]`.
    DefaultQubit,
}

impl PairSource {
    /// Combines the optional `--state0/--state1/--gen` arguments.
    pub fn from_args(state0: Option<PathBuf>, state1: Option<PathBuf>, gen: Option<GenSpec>) -> Result<Self> {
        match (state0, state1, gen) {
            (None, None, None) => Ok(PairSource::DefaultQubit),
            (None, None, Some(g)) => Ok(PairSource::Generated(g)),
            (Some(state0), Some(state1), None) => Ok(PairSource::Files { state0, state1 }),
            (_, _, Some(_)) => Err(Error::invalid("--gen cannot be combined with state files")),
            _ => Err(Error::invalid("--state0 and --state1 must be given together")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub source: PairSource,
    /// Largest number of copies.
    pub n_max: usize,
    /// Number of interior `s` points used by identity checks.
    pub grid: usize,
    pub rank_tol: f64,
    pub size_cap: SizeCap,
    /// Classical priors; the quantum subcommands always use equal weights.
    pub priors: Priors,
    pub out: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            source: PairSource::DefaultQubit,
            n_max: DEFAULT_N_MAX,
            grid: DEFAULT_GRID,
            rank_tol: DEFAULT_RANK_TOL,
            size_cap: SizeCap::DEFAULT,
            priors: Priors::EQUAL,
            out: None,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_max == 0 {
            return Err(Error::invalid("--n must be at least 1"));
        }
        if self.grid == 0 {
            return Err(Error::invalid("--grid must be at least 1"));
        }
        if !(self.rank_tol > 0.0 && self.rank_tol < 1.0) {
            return Err(Error::invalid(format!(
                "--eps-rank must lie in (0, 1), got {}",
                self.rank_tol
            )));
        }
        Ok(())
    }

    pub fn settings(&self) -> Settings {
        Settings {
            rank_tol: self.rank_tol,
            size_cap: self.size_cap,
        }
    }

    /// Loads or generates the quantum pair.
    pub fn load_pair(&self) -> Result<StatePair> {
        self.validate()?;
        let (rho0, rho1) = match &self.source {
            PairSource::Files { state0, state1 } => (read_state(state0)?, read_state(state1)?),
            PairSource::Generated(g) => {
                self.size_cap.check("state dimension", g.dim as u128)?;
                (
                    random_density(g.dim, g.rank, g.seed)?,
                    random_density(g.dim, g.rank, g.seed.wrapping_add(1))?,
                )
            }
            PairSource::DefaultQubit => {
                let (a, b) = default_qubit_states();
                (a, b)
            }
        };
        StatePair::with_settings(rho0, rho1, self.settings())
    }

    /// Loads the classical pair; only files are accepted.
    pub fn load_distributions(&self) -> Result<(DiscreteDistribution, DiscreteDistribution)> {
        self.validate()?;
        match &self.source {
            PairSource::Files { state0, state1 } => Ok((read_distribution(state0)?, read_distribution(state1)?)),
            _ => Err(Error::invalid(
                "classical needs two distribution files (--state0, --state1)",
            )),
        }
    }
}

pub fn default_qubit_states() -> (DensityMatrix, DensityMatrix) {
    let rho0 = DensityMatrix::from_diagonal(&[0.75, 0.25]).expect("valid state");
    let rho1 =
        DensityMatrix::new(HermitianMatrix::from_real(2, &[0.5, 0.25, 0.25, 0.5]).expect("2x2")).expect("valid state");
    (rho0, rho1)
}

/// `ρ₀ = diag(0.75, 0.25)`, `ρ₁ = [[0.5, 0.25], [0.25, 0.5]]` with default settings.
pub fn default_qubit_pair() -> StatePair {
    let (rho0, rho1) = default_qubit_states();
    StatePair::new(rho0, rho1).expect("valid pair")
}

/// Parses `w0,w1`.
pub fn parse_priors(s: &str) -> Result<Priors> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Error::invalid(format!("priors must be w0,w1; got {s:?}"));
    if parts.len() != 2 {
        return Err(bad());
    }
    let w0: f64 = parts[0].parse().map_err(|_| bad())?;
    let w1: f64 = parts[1].parse().map_err(|_| bad())?;
    Priors::new(w0, w1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subcommand {
    Qcb,
    Error,
    Converge,
    Classical,
    Nsmap,
}

/// Runs one subcommand and renders its output (CSV for `converge`, JSON
/// otherwise). `--n` is the copy count for `error` and the sweep limit for
/// `converge` and `classical`.
pub fn execute(cmd: Subcommand, cfg: &ExperimentConfig) -> Result<String> {
    match cmd {
        Subcommand::Classical => {
            let (p0, p1) = cfg.load_distributions()?;
            run_classical(&p0, &p1, cfg.priors, cfg.n_max)?.to_json()
        }
        Subcommand::Qcb => run_qcb(&cfg.load_pair()?, cfg.grid)?.to_json(),
        Subcommand::Error => run_error(&cfg.load_pair()?, cfg.n_max)?.to_json(),
        Subcommand::Nsmap => run_nsmap(&cfg.load_pair()?, cfg.grid)?.to_json(),
        Subcommand::Converge => converge_csv(&run_converge(&cfg.load_pair()?, cfg.n_max)?),
    }
}

/// Writes to `out` when given; otherwise returns the text for stdout.
pub fn emit(out: Option<&Path>, text: String) -> Result<Option<String>> {
    match out {
        Some(path) => {
            fs::write(path, text)?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}
