//! Pure states: the minimal error has the closed form ½(1 − √(1 − Fⁿ)) and
//! the Chernoff bound is log F, with F the squared overlap.

use num_complex::Complex64;
use qchernoff::quantum::{min_error_exact, qcb};
use qchernoff::{DensityMatrix, StatePair};

fn main() -> qchernoff::Result<()> {
    let theta = 0.6f64;
    let psi0 = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
    let psi1 = [Complex64::new(theta.cos(), 0.0), Complex64::new(0.0, theta.sin())];
    let pair = StatePair::new(DensityMatrix::pure(&psi0)?, DensityMatrix::pure(&psi1)?)?;
    let f = theta.cos().powi(2);
    for n in 1..=8 {
        let closed = 0.5 * (1.0 - (1.0 - f.powi(n as i32)).sqrt());
        println!(
            "n = {n}  exact {:.12}  closed form {closed:.12}",
            min_error_exact(&pair, n)?
        );
    }
    let q = qcb(&pair)?;
    println!("bound {:.12}  log F {:.12}  ({})", q.bound, f.ln(), q.minimizer.label());
    Ok(())
}
