use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use qchernoff::classical::Priors;
use qchernoff::harness::{
    emit, execute, parse_priors, ExperimentConfig, GenSpec, PairSource, Subcommand, DEFAULT_GRID,
};
use qchernoff::linalg::{SizeCap, DEFAULT_RANK_TOL};
use qchernoff::{Error, Result};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Command {
    Qcb,
    Error,
    Converge,
    Classical,
    Nsmap,
}

/// Quantum and classical Chernoff bounds for binary hypothesis testing.
#[derive(Debug, Parser)]
#[command(name = "qchernoff", version)]
struct Cli {
    command: Command,
    /// State file for H0 (distribution file for `classical`).
    #[arg(long)]
    state0: Option<PathBuf>,
    /// State file for H1 (distribution file for `classical`).
    #[arg(long)]
    state1: Option<PathBuf>,
    /// Random pair `d,rank,seed`; rho1 uses seed + 1.
    #[arg(long, value_parser = parse_gen)]
    gen: Option<GenSpec>,
    /// Copies for `error`; largest n for `converge` and `classical`.
    #[arg(long, default_value_t = qchernoff::harness::DEFAULT_N_MAX)]
    n: usize,
    /// Interior points of the s-grid used by identity checks.
    #[arg(long, default_value_t = DEFAULT_GRID)]
    grid: usize,
    /// Relative eigenvalue threshold for supports and ties.
    #[arg(long = "eps-rank", default_value_t = DEFAULT_RANK_TOL)]
    eps_rank: f64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Priors `w0,w1` (classical only).
    #[arg(long)]
    priors: Option<String>,
}

fn parse_gen(s: &str) -> std::result::Result<GenSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn run(cli: Cli) -> Result<Option<String>> {
    let cmd = match cli.command {
        Command::Qcb => Subcommand::Qcb,
        Command::Error => Subcommand::Error,
        Command::Converge => Subcommand::Converge,
        Command::Classical => Subcommand::Classical,
        Command::Nsmap => Subcommand::Nsmap,
    };
    let priors = match (&cli.priors, cmd) {
        (None, _) => Priors::EQUAL,
        (Some(p), Subcommand::Classical) => parse_priors(p)?,
        (Some(_), _) => return Err(Error::Invalid("--priors is accepted only by `classical`".into())),
    };
    let cfg = ExperimentConfig {
        source: PairSource::from_args(cli.state0, cli.state1, cli.gen)?,
        n_max: cli.n,
        grid: cli.grid,
        rank_tol: cli.eps_rank,
        size_cap: SizeCap::from_env()?,
        priors,
        out: cli.out,
    };
    let text = execute(cmd, &cfg)?;
    emit(cfg.out.as_deref(), text)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Some(text)) => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qchernoff: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
