mod common;

use common::*;
use proptest::prelude::*;
use qchernoff::nsmap::{error_floor, interior_grid, ns_chernoff_identity_check, ns_distributions};
use qchernoff::quantum::{bayes_error_quantum, test_from_spectrum};
use qchernoff::states::random_unitary;
use qchernoff::StatePair;
use rand::Rng;

/// Representative of each value under single-linkage clustering at `tol`.
fn cluster(values: &[f64], tol: f64) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut rep = vec![0.0; values.len()];
    let mut start = f64::NAN;
    let mut prev = f64::NEG_INFINITY;
    for &i in &order {
        if values[i] - prev > tol {
            start = values[i];
        }
        rep[i] = start;
        prev = values[i];
    }
    rep
}

/// Atom masses `(p, q)` summed per eigenvalue pair `(λ_i, γ_j)`. Eigenvectors
/// inside a degenerate eigenspace are not unique, but the total mass carried
/// by each eigenvalue pair is.
fn merged_atoms(atoms: Vec<(f64, f64, f64, f64)>) -> Vec<(f64, f64, f64, f64)> {
    let ls: Vec<f64> = atoms.iter().map(|a| a.0).collect();
    let gs: Vec<f64> = atoms.iter().map(|a| a.1).collect();
    let (lr, gr) = (cluster(&ls, 1e-12), cluster(&gs, 1e-12));
    let mut groups: Vec<(f64, f64, f64, f64)> = Vec::new();
    for (k, a) in atoms.iter().enumerate() {
        match groups.iter_mut().find(|g| g.0 == lr[k] && g.1 == gr[k]) {
            Some(g) => {
                g.2 += a.2;
                g.3 += a.3;
            }
            None => groups.push((lr[k], gr[k], a.2, a.3)),
        }
    }
    groups.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    groups
}

fn atoms_of(pair: &StatePair) -> Vec<(f64, f64, f64, f64)> {
    let ns = ns_distributions(pair).unwrap();
    let d = pair.dim();
    let (l, g) = (&pair.spectrum0().eigenvalues, &pair.spectrum1().eigenvalues);
    (0..d * d)
        .map(|k| (l[k / d], g[k % d], ns.p.probs()[k], ns.q.probs()[k]))
        .collect()
}

fn product_atoms(single: &[(f64, f64, f64, f64)], n: usize) -> Vec<(f64, f64, f64, f64)> {
    let mut acc = vec![(1.0, 1.0, 1.0, 1.0)];
    for _ in 0..n {
        acc = acc
            .iter()
            .flat_map(|a| single.iter().map(move |b| (a.0 * b.0, a.1 * b.1, a.2 * b.2, a.3 * b.3)))
            .collect();
    }
    acc
}

proptest! {
    #![proptest_config(proptest_config(48))]

    #[test]
    fn identity_holds_on_random_pairs(seed in any::<u64>(), d in 2usize..=4, r0 in 0usize..4, r1 in 0usize..4) {
        let pair = random_pair(d, 1 + r0 % d, 1 + r1 % d, seed);
        prop_assert!(ns_chernoff_identity_check(&pair, &interior_grid(25)).unwrap() <= 1e-10);
    }

    #[test]
    fn tensor_power_embeds_as_product(seed in any::<u64>(), d in 2usize..=3, n in 2usize..=3) {
        prop_assume!(d.pow(n as u32) <= 27);
        let pair = random_pair(d, d, 1 + (seed as usize) % d, seed);
        let big = pair.tensor_power(n).unwrap();
        let got = merged_atoms(atoms_of(&big));
        let want = merged_atoms(product_atoms(&atoms_of(&pair), n));
        prop_assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(&want) {
            prop_assert!((g.0 - w.0).abs() <= 1e-11 && (g.1 - w.1).abs() <= 1e-11, "{:?} vs {:?}", g, w);
            prop_assert!((g.2 - w.2).abs() <= 1e-10 && (g.3 - w.3).abs() <= 1e-10, "{:?} vs {:?}", g, w);
        }
    }
}

#[test]
fn floor_bounds_random_projections() {
    let mut r = rng(12);
    for seed in 0..100u64 {
        let d = 2 + (seed % 3) as usize;
        let pair = random_pair(d, 1 + (seed / 3) as usize % d, d, 400 + seed);
        let floor = error_floor(&pair).unwrap();
        for _ in 0..20 {
            let u = random_unitary(d, &mut r);
            let spectrum: Vec<f64> = (0..d).map(|_| if r.random::<bool>() { 1.0 } else { 0.0 }).collect();
            let projection = test_from_spectrum(&u, &spectrum).unwrap();
            assert!(bayes_error_quantum(&pair, 1, &projection).unwrap() >= floor - 1e-12);
        }
    }
}
