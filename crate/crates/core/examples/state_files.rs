//! Writes a generated pair to JSON state files, reads them back, and runs the
//! `qcb` report on the result.

use qchernoff::harness::run_qcb;
use qchernoff::io::{read_state, write_state};
use qchernoff::states::random_density;
use qchernoff::StatePair;

fn main() -> qchernoff::Result<()> {
    let dir = std::env::temp_dir().join(format!("qchernoff-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let (f0, f1) = (dir.join("rho0.json"), dir.join("rho1.json"));
    write_state(&f0, &random_density(2, 2, 1)?)?;
    write_state(&f1, &random_density(2, 2, 2)?)?;
    println!("{}", std::fs::read_to_string(&f0)?);

    let pair = StatePair::new(read_state(&f0)?, read_state(&f1)?)?;
    print!("{}", run_qcb(&pair, 101)?.to_json()?);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
