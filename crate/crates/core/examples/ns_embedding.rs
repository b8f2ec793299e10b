//! The classical pair on d² atoms attached to a quantum pair: its affinity
//! matches the quantum one, and its Bayes error bounds every test from below.

use qchernoff::nsmap::{error_floor, interior_grid, ns_chernoff_identity_check, ns_distributions};
use qchernoff::quantum::min_error_exact;
use qchernoff::states::random_density;
use qchernoff::StatePair;

fn main() -> qchernoff::Result<()> {
    let pair = StatePair::new(random_density(2, 2, 7)?, random_density(2, 1, 8)?)?;
    let ns = ns_distributions(&pair)?;
    for k in 0..ns.p.len() {
        let (i, j) = ns.pair_index(k);
        println!("({i},{j})  p = {:.6}  q = {:.6}", ns.p.probs()[k], ns.q.probs()[k]);
    }
    let residual = ns_chernoff_identity_check(&pair, &interior_grid(99))?;
    println!("identity residual {residual:.3e}");
    println!(
        "floor {:.9} <= min error {:.9}",
        error_floor(&pair)?,
        min_error_exact(&pair, 1)?
    );
    Ok(())
}
