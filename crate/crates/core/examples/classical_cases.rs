//! The classical Chernoff problem for pairs with overlapping, nested and
//! disjoint supports.

use qchernoff::classical::{chernoff, chernoff_kl_form, sigma_characterization, ChernoffCase, DiscreteDistribution};

fn main() -> qchernoff::Result<()> {
    let pairs = [
        ("overlapping", vec![0.9, 0.1], vec![0.5, 0.5]),
        ("nested", vec![1.0, 0.0], vec![0.5, 0.5]),
        ("reversed", vec![0.5, 0.5], vec![1.0, 0.0]),
        ("partial", vec![0.6, 0.4, 0.0], vec![0.1, 0.2, 0.7]),
        ("identical", vec![0.3, 0.7], vec![0.3, 0.7]),
        ("disjoint", vec![1.0, 0.0], vec![0.0, 1.0]),
    ];
    for (name, a, b) in pairs {
        let p0 = DiscreteDistribution::new(a)?;
        let p1 = DiscreteDistribution::new(b)?;
        let c = chernoff(&p0, &p1)?;
        print!(
            "{name:<12} case {:<9} value {:>16.12}  {}",
            c.case.tag(),
            c.value,
            c.minimizer.label()
        );
        if c.case != ChernoffCase::Disjoint {
            print!("  kl-form {:.12}", chernoff_kl_form(&p0, &p1)?);
        }
        if c.case == ChernoffCase::A {
            let check = sigma_characterization(&p0, &p1)?;
            print!("  residuals {:.1e} {:.1e}", check.residual0, check.residual1);
        }
        println!();
    }
    Ok(())
}
