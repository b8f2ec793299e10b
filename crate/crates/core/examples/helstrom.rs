//! Minimal error of discriminating n copies of two qubit states, and the
//! Helstrom projection that attains it.

use qchernoff::harness::default_qubit_pair;
use qchernoff::quantum::{bayes_error_quantum, helstrom_test, min_error_exact, TestOperator};

fn main() -> qchernoff::Result<()> {
    let pair = default_qubit_pair();
    println!("{:>2} {:>12} {:>12} {:>12}", "n", "min_error", "helstrom", "guess_H0");
    for n in 1..=6 {
        let dim = 2usize.pow(n as u32);
        let exact = min_error_exact(&pair, n)?;
        let pi = helstrom_test(&pair, n)?;
        let attained = bayes_error_quantum(&pair, n, &pi)?;
        let trivial = bayes_error_quantum(&pair, n, &TestOperator::zero(dim))?;
        println!("{n:>2} {exact:>12.9} {attained:>12.9} {trivial:>12.9}");
    }
    Ok(())
}
