//! Exact Bayes error of n i.i.d. observations by type-class enumeration,
//! against the per-letter Chernoff exponent.

use qchernoff::classical::{chernoff, log_product_min_error, type_class_count, DiscreteDistribution, Priors};

fn main() -> qchernoff::Result<()> {
    let p0 = DiscreteDistribution::new(vec![0.5, 0.3, 0.2, 0.0])?;
    let p1 = DiscreteDistribution::new(vec![0.1, 0.3, 0.3, 0.3])?;
    let bound = chernoff(&p0, &p1)?.value;
    println!("chernoff {bound:.9}");
    for n in [1, 2, 5, 10, 20, 50, 100] {
        let l = log_product_min_error(&p0, &p1, n, Priors::EQUAL)?;
        println!(
            "n = {n:>3}  classes {:>7}  log error {:>14.9}  per copy {:>12.9}",
            type_class_count(n, 4),
            l,
            l / n as f64
        );
    }
    Ok(())
}
