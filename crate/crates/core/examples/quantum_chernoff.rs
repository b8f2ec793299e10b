//! Quantum Chernoff bound of a random qutrit pair, with the affinity
//! `Tr[ρ₀^{1−s} ρ₁^s]` tabulated on a coarse grid.

use qchernoff::quantum::{a_hat, qcb};
use qchernoff::states::random_density;
use qchernoff::StatePair;

fn main() -> qchernoff::Result<()> {
    let pair = StatePair::new(random_density(3, 3, 42)?, random_density(3, 2, 43)?)?;
    for k in 0..=10 {
        let s = k as f64 / 10.0;
        println!("s = {s:.1}  A(s) = {:.12}", a_hat(&pair, s)?);
    }
    let q = qcb(&pair)?;
    println!("bound     {:.12}", q.bound);
    println!("minimizer {}", q.minimizer.label());
    println!("case      {}", q.case.tag());
    println!(
        "limits    A(0+) = {:.12}, A(1-) = {:.12}",
        q.limit_at_zero, q.limit_at_one
    );
    Ok(())
}
