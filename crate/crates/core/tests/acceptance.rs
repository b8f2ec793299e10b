//! Acceptance suite: one test and one PASS/FAIL line per criterion.
//! Run with `cargo test --test acceptance -- --nocapture --test-threads=1`
//! to see the lines in order.

mod common;

use std::time::{Duration, Instant};

use common::*;
use qchernoff::classical::{
    chernoff, chernoff_kl_form, log_product_min_error, product_min_error, sigma_characterization, ChernoffCase,
    DiscreteDistribution, HellingerArc, Priors,
};
use qchernoff::harness::{default_qubit_pair, run_converge};
use qchernoff::linalg::{eig_hermitian, frac_power};
use qchernoff::nsmap::ns_distributions;
use qchernoff::quantum::{bayes_error_quantum, min_error_exact, qcb, test_from_spectrum};
use qchernoff::states::random_unitary;
use qchernoff::{DensityMatrix, StatePair};
use rand::Rng;

fn report(id: &str, pass: bool, detail: String) {
    println!("criterion {id}: {} ({detail})", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {id} failed: {detail}");
}

fn within(elapsed: Duration, secs: u64) -> bool {
    elapsed <= Duration::from_secs(secs)
}

#[test]
fn criterion_01_ns_identity() {
    let start = Instant::now();
    let grid: Vec<f64> = (0..101)
        .map(|k| k as f64 / 100.0)
        .filter(|s| *s > 0.0 && *s < 1.0)
        .collect();
    let mut worst = 0.0f64;
    for seed in 0..100u64 {
        let d = 2 + (seed % 3) as usize;
        let rank0 = 1 + (seed / 3) as usize % d;
        let rank1 = 1 + (seed / 7) as usize % d;
        let pair = random_pair(d, rank0, rank1, 1000 + seed);
        let ns = ns_distributions(&pair).unwrap();
        for &s in &grid {
            let lhs = log_affinity(ns.p.probs(), ns.q.probs(), s).exp();
            let a = frac_power(pair.rho0().matrix(), 1.0 - s).unwrap();
            let b = frac_power(pair.rho1().matrix(), s).unwrap();
            let rhs = a.trace_product(&b).unwrap();
            worst = worst.max((lhs - rhs).abs());
        }
    }
    let elapsed = start.elapsed();
    report(
        "1",
        worst <= 1e-10 && within(elapsed, 10),
        format!("max residual {worst:.2e} <= 1e-10 over 100 pairs x 99 interior s; {elapsed:.1?}"),
    );
}

#[test]
fn criterion_02_finite_n_floor() {
    let start = Instant::now();
    let mut pairs = vec![default_qubit_pair()];
    for seed in 0..20u64 {
        pairs.push(random_pair(2, 1 + (seed % 2) as usize, 2, 2000 + seed));
    }
    let mut worst = f64::NEG_INFINITY;
    for pair in &pairs {
        let ns = ns_distributions(pair).unwrap();
        for n in 1..=8 {
            let floor = 0.5 * product_min_error(&ns.p, &ns.q, n, Priors::EQUAL).unwrap();
            let err = min_error_exact(pair, n).unwrap();
            worst = worst.max(floor - err);
        }
    }
    let elapsed = start.elapsed();
    report(
        "2",
        worst <= 1e-12 && within(elapsed, 60),
        format!("max(floor - err) = {worst:.2e} <= 1e-12 over 21 pairs, n <= 8; {elapsed:.1?}"),
    );
}

#[test]
fn criterion_03_helstrom_optimality() {
    let start = Instant::now();
    let mut r = rng(3);
    let mut worst = f64::NEG_INFINITY;
    for seed in 0..50u64 {
        let d = 2 + (seed % 2) as usize;
        let n = 1 + (seed / 2 % 3) as usize;
        let pair = random_pair(d, 1 + (seed / 6) as usize % d, d, 3000 + seed);
        let exact = min_error_exact(&pair, n).unwrap();
        let dim = d.pow(n as u32);
        for _ in 0..20 {
            let u = random_unitary(dim, &mut r);
            let spectrum: Vec<f64> = (0..dim).map(|_| r.random::<f64>()).collect();
            let test = test_from_spectrum(&u, &spectrum).unwrap();
            let err = bayes_error_quantum(&pair, n, &test).unwrap();
            worst = worst.max(exact - err);
        }
    }
    let elapsed = start.elapsed();
    report(
        "3",
        worst <= 1e-10 && within(elapsed, 30),
        format!("max(min_error - Err(r)) = {worst:.2e} <= 1e-10 over 50 pairs x 20 tests; {elapsed:.1?}"),
    );
}

/// `½(1 − ½‖A‖₁)` with the trace norm from a full Jacobi decomposition.
fn dense_min_error(rho0: &DensityMatrix, rho1: &DensityMatrix, n: usize) -> f64 {
    let a = kron_power(rho0.matrix().as_matrix(), n);
    let b = kron_power(rho1.matrix().as_matrix(), n);
    let diff = hermitian(&b - &a);
    let norm: f64 = eig_hermitian(&diff).unwrap().eigenvalues.iter().map(|l| l.abs()).sum();
    0.5 * (1.0 - 0.5 * norm)
}

#[test]
fn criterion_04_pure_state_closed_form() {
    // For pure states the difference of n-fold products is supported on the
    // span of |ψ₀⟩^{⊗n}, |ψ₁⟩^{⊗n}, with eigenvalues ±√(1 − Fⁿ).
    let closed = |f: f64, n: usize| 0.5 * (1.0 - (1.0 - f.powi(n as i32)).sqrt());
    let mut r = rng(4);
    let (mut worst_oracle, mut worst_exact, mut worst_bound) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..20 {
        let psi0 = random_vector(2, &mut r);
        let psi1 = random_vector(2, &mut r);
        let f = psi0
            .iter()
            .zip(&psi1)
            .map(|(a, b)| a.conj() * b)
            .sum::<num_complex::Complex64>()
            .norm_sqr();
        let rho0 = DensityMatrix::pure(&psi0).unwrap();
        let rho1 = DensityMatrix::pure(&psi1).unwrap();
        for n in 1..=4 {
            worst_oracle = worst_oracle.max((dense_min_error(&rho0, &rho1, n) - closed(f, n)).abs());
        }
        let pair = StatePair::new(rho0, rho1).unwrap();
        for n in 1..=10 {
            worst_exact = worst_exact.max((min_error_exact(&pair, n).unwrap() - closed(f, n)).abs());
        }
        worst_bound = worst_bound.max((qcb(&pair).unwrap().bound - f.ln()).abs());
    }
    report(
        "4",
        worst_oracle <= 1e-10 && worst_exact <= 1e-10 && worst_bound <= 1e-10,
        format!(
            "closed form vs dense oracle {worst_oracle:.2e} (n <= 4), vs min_error_exact {worst_exact:.2e} (n <= 10), \
             qcb vs log F {worst_bound:.2e}; all <= 1e-10"
        ),
    );
}

#[test]
fn criterion_05_commutative_reduction() {
    let (mut worst_bound, mut worst_err) = (0.0f64, 0.0f64);
    for seed in 0..20u64 {
        let (pair, a, b) = commuting_pair(2, 5000 + seed);
        let p0 = DiscreteDistribution::new(a).unwrap();
        let p1 = DiscreteDistribution::new(b).unwrap();
        let q = qcb(&pair).unwrap().bound;
        worst_bound = worst_bound.max((q - chernoff(&p0, &p1).unwrap().value).abs());
        for n in 1..=8 {
            let quantum = min_error_exact(&pair, n).unwrap();
            let classical = product_min_error(&p0, &p1, n, Priors::EQUAL).unwrap();
            worst_err = worst_err.max((quantum - classical).abs());
        }
    }
    report(
        "5",
        worst_bound <= 1e-12 && worst_err <= 1e-10,
        format!(
            "qcb vs chernoff {worst_bound:.2e} <= 1e-12; min_error_exact vs product_min_error {worst_err:.2e} <= 1e-10"
        ),
    );
}

#[test]
fn criterion_06_classical_nested_support() {
    let p0 = DiscreteDistribution::new(vec![1.0, 0.0]).unwrap();
    let p1 = DiscreteDistribution::new(vec![0.5, 0.5]).unwrap();
    let (mut worst_rel, mut worst_gap) = (0.0f64, 0.0f64);
    for n in 1..=60 {
        let exact = 0.5f64.powi(n as i32 + 1);
        let delta = product_min_error(&p0, &p1, n, Priors::EQUAL).unwrap();
        worst_rel = worst_rel.max((delta - exact).abs() / exact);
        let gap = log_product_min_error(&p0, &p1, n, Priors::EQUAL).unwrap() / n as f64 + 2f64.ln();
        worst_gap = worst_gap.max((gap + 2f64.ln() / n as f64).abs());
    }
    let case = chernoff(&p0, &p1).unwrap().case;
    report(
        "6",
        worst_rel <= 1e-12 && worst_gap <= 1e-12 && case == ChernoffCase::B,
        format!(
            "relative error {worst_rel:.2e}, gap vs -(log 2)/n {worst_gap:.2e}, case {} (n <= 60)",
            case.tag()
        ),
    );
}

/// The 500 seeded pairs shared by criteria 7 and 8.
fn classical_pairs() -> Vec<(DiscreteDistribution, DiscreteDistribution)> {
    let mut r = rng(7);
    (0..500)
        .map(|_| {
            let m = r.random_range(2..=5);
            (sparse_distribution(m, 0.3, &mut r), sparse_distribution(m, 0.3, &mut r))
        })
        .collect()
}

#[test]
fn criterion_07_case_analysis() {
    // A bare 10⁴-point grid sits up to ½·H''·(5·10⁻⁵)² above the true infimum,
    // which exceeds 1e-8 once H'' ≳ 8. The solver is therefore compared with
    // the grid refined inside its best cell, and separately must never lie
    // above the bare grid minimum.
    let start = Instant::now();
    let (mut worst_value, mut worst_kl, mut above_grid, mut bare_gap) = (0.0f64, 0.0f64, f64::NEG_INFINITY, 0.0f64);
    let mut cases = std::collections::BTreeMap::new();
    for (p0, p1) in classical_pairs() {
        let c = chernoff(&p0, &p1).unwrap();
        *cases.entry(c.case.tag()).or_insert(0) += 1;
        let grid = chernoff_grid_oracle(p0.probs(), p1.probs(), 10_000, false);
        let oracle = chernoff_grid_oracle(p0.probs(), p1.probs(), 10_000, true);
        if oracle == f64::NEG_INFINITY {
            worst_value = worst_value.max(if c.value == oracle { 0.0 } else { f64::INFINITY });
            continue;
        }
        worst_value = worst_value.max((c.value - oracle).abs());
        above_grid = above_grid.max(c.value - grid);
        bare_gap = bare_gap.max((c.value - grid).abs());
        let kl_form = chernoff_kl_form(&p0, &p1).unwrap();
        worst_kl = worst_kl.max((kl_form - oracle).abs()).max((kl_form - c.value).abs());
    }
    let elapsed = start.elapsed();
    report(
        "7",
        worst_value <= 1e-8 && above_grid <= 1e-12 && worst_kl <= 1e-9 && within(elapsed, 30),
        format!(
            "value vs refined grid oracle {worst_value:.2e} <= 1e-8; value - bare grid min <= {above_grid:.2e} \
             (largest bare-grid gap {bare_gap:.2e}); KL form {worst_kl:.2e} <= 1e-9; cases {cases:?}; {elapsed:.1?}"
        ),
    );
}

#[test]
fn criterion_08_derivatives() {
    let h = 1e-5;
    let (mut worst_fd, mut min_curv, mut worst_sigma) = (0.0f64, f64::INFINITY, 0.0f64);
    let mut case_a = 0;
    for (p0, p1) in classical_pairs() {
        let arc = HellingerArc::new(&p0, &p1).unwrap();
        if arc.is_empty() {
            continue;
        }
        for k in 1..20 {
            let s = k as f64 / 20.0;
            let fd =
                (log_affinity(p0.probs(), p1.probs(), s + h) - log_affinity(p0.probs(), p1.probs(), s - h)) / (2.0 * h);
            worst_fd = worst_fd.max((arc.slope(s).unwrap() - fd).abs());
            min_curv = min_curv.min(arc.curvature(s).unwrap());
        }
        if chernoff(&p0, &p1).unwrap().case == ChernoffCase::A {
            case_a += 1;
            let check = sigma_characterization(&p0, &p1).unwrap();
            worst_sigma = worst_sigma.max(check.residual0).max(check.residual1);
        }
    }
    report(
        "8",
        worst_fd <= 1e-6 && min_curv >= -1e-12 && worst_sigma <= 1e-8,
        format!("H' vs finite differences {worst_fd:.2e}; min H'' {min_curv:.2e}; sigma residuals {worst_sigma:.2e} over {case_a} case-(a) pairs"),
    );
}

#[test]
fn criterion_09_convergence_observation() {
    let start = Instant::now();
    let run = run_converge(&default_qubit_pair(), 12).unwrap();
    let elapsed = start.elapsed();
    let last = run.rows.last().unwrap();
    let width = last.upper.unwrap() - last.floor.unwrap();
    let outside: Vec<usize> = run
        .rows
        .iter()
        .filter(|r| !(run.qcb_bound >= r.floor.unwrap() - 1e-9 && run.qcb_bound <= r.upper.unwrap() + 1e-9))
        .map(|r| r.n)
        .collect();
    for r in &run.rows {
        println!(
            "  n = {:>2}  floor {:+.6}  exponent {:+.6}  upper {:+.6}  width {:.6}",
            r.n,
            r.floor.unwrap(),
            r.exponent.unwrap(),
            r.upper.unwrap(),
            r.upper.unwrap() - r.floor.unwrap()
        );
    }
    report(
        "9",
        width <= 0.25 && outside.is_empty() && within(elapsed, 300),
        format!(
            "width at n = 12 is {width:.4} (<= 0.25); qcb {:.6} outside [floor_n, upper_n] for n in {outside:?}; {elapsed:.1?}",
            run.qcb_bound
        ),
    );
}

#[test]
fn criterion_10_upper_risk_bound() {
    let mut r = rng(10);
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..50 {
        let m = r.random_range(2..=5);
        let p0 = DiscreteDistribution::new(simplex(m, &mut r)).unwrap();
        let p1 = DiscreteDistribution::new(simplex(m, &mut r)).unwrap();
        for n in 1..=20 {
            let e = log_product_min_error(&p0, &p1, n, Priors::EQUAL).unwrap() / n as f64;
            for k in 1..=9 {
                let s = k as f64 / 10.0;
                let bound = log_affinity(p0.probs(), p1.probs(), s) + 2f64.ln() / n as f64;
                worst = worst.max(e - bound);
            }
        }
    }
    report(
        "10",
        worst <= 1e-12,
        format!("max excess over H(s) + (log 2)/n is {worst:.2e} <= 1e-12"),
    );
}
