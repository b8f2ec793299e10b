//! Commuting states reduce to the classical problem on their eigenvalues.

use qchernoff::classical::{chernoff, product_min_error, DiscreteDistribution, Priors};
use qchernoff::quantum::{min_error_exact, qcb};
use qchernoff::{DensityMatrix, StatePair};

fn main() -> qchernoff::Result<()> {
    let a = [0.6, 0.3, 0.1];
    let b = [0.2, 0.2, 0.6];
    let pair = StatePair::new(DensityMatrix::from_diagonal(&a)?, DensityMatrix::from_diagonal(&b)?)?;
    let (p0, p1) = (
        DiscreteDistribution::new(a.to_vec())?,
        DiscreteDistribution::new(b.to_vec())?,
    );
    println!("quantum bound   {:.15}", qcb(&pair)?.bound);
    println!("classical bound {:.15}", chernoff(&p0, &p1)?.value);
    for n in 1..=5 {
        println!(
            "n = {n}  quantum {:.15}  classical {:.15}",
            min_error_exact(&pair, n)?,
            product_min_error(&p0, &p1, n, Priors::EQUAL)?
        );
    }
    Ok(())
}
