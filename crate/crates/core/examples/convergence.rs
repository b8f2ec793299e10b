//! Convergence study for the default qubit pair as CSV on stdout.
//! Pass a copy limit as the first argument (default 8; 12 takes about a minute).

use qchernoff::harness::{converge_csv, default_qubit_pair, run_converge};

fn main() -> qchernoff::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let run = run_converge(&default_qubit_pair(), n_max)?;
    print!("{}", converge_csv(&run)?);
    Ok(())
}
