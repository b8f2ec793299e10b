//! Error functionals for discriminating `ρ₀^{⊗n}` from `ρ₁^{⊗n}` with equal priors.

use num_complex::Complex64;

use crate::classical::{chernoff, product_min_error, ChernoffCase, DiscreteDistribution, Minimizer, Priors};
use crate::error::{Error, Result};
use crate::linalg::{eigenvalues_hermitian, support_projection_with, trace_norm, ComplexMatrix, HermitianMatrix};
use crate::nsmap::ns_distributions;
use crate::states::StatePair;

/// Self-adjoint `r` with `0 ≤ r ≤ 𝟙`; the measurement outcome "r" decides for H₁.
#[derive(Debug, Clone, PartialEq)]
pub struct TestOperator {
    matrix: HermitianMatrix,
}

impl TestOperator {
    /// Checks that the spectrum lies in `[−tol, 1 + tol]`.
    pub fn new(matrix: HermitianMatrix, tol: f64) -> Result<Self> {
        let spectrum = eigenvalues_hermitian(&matrix)?;
        let (hi, lo) = (spectrum[0], spectrum[spectrum.len() - 1]);
        if lo < -tol || hi > 1.0 + tol {
            return Err(Error::invalid(format!(
                "test operator spectrum [{lo}, {hi}] leaves [0, 1]"
            )));
        }
        Ok(TestOperator { matrix })
    }

    pub fn zero(dim: usize) -> Self {
        TestOperator {
            matrix: HermitianMatrix::zeros(dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        TestOperator {
            matrix: HermitianMatrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }
}

fn copies_dim(pair: &StatePair, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::invalid("number of copies must be at least 1"));
    }
    let dim = (pair.dim() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    pair.settings().size_cap.check("n-copy dimension", dim)?;
    Ok(dim as usize)
}

/// `½ Tr[r ρ₀^{⊗n}] + ½ Tr[(𝟙 − r) ρ₁^{⊗n}]`.
pub fn bayes_error_quantum(pair: &StatePair, n: usize, test: &TestOperator) -> Result<f64> {
    let dim = copies_dim(pair, n)?;
    if test.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: test.dim(),
        });
    }
    let cap = pair.settings().size_cap;
    let r0 = pair.rho0().matrix().tensor_power(n, cap)?;
    let r1 = pair.rho1().matrix().tensor_power(n, cap)?;
    let type1 = test.matrix.trace_product(&r0)?;
    let type2 = r1.trace() - test.matrix.trace_product(&r1)?;
    Ok((0.5 * (type1 + type2)).clamp(0.0, 1.0))
}

/// Holevo–Helstrom projection `supp (ρ₁^{⊗n} − ρ₀^{⊗n})₊`; eigenvalues inside
/// the rank threshold are left out.
pub fn helstrom_test(pair: &StatePair, n: usize) -> Result<TestOperator> {
    copies_dim(pair, n)?;
    let cap = pair.settings().size_cap;
    let diff = &pair.rho1().matrix().tensor_power(n, cap)? - &pair.rho0().matrix().tensor_power(n, cap)?;
    Ok(TestOperator {
        matrix: support_projection_with(&diff, pair.settings().rank_tol)?,
    })
}

/// Real symmetric matrices unitarily equivalent (by one common unitary) to
/// `ρ₀, ρ₁`, when such a frame can be found by diagonalizing ρ₀ and
/// re-phasing the basis. Trace norms of tensor-power differences are
/// invariant under the change of frame.
fn common_real_frame(pair: &StatePair) -> Option<(HermitianMatrix, HermitianMatrix)> {
    let m0 = pair.rho0().matrix();
    let m1 = pair.rho1().matrix();
    if m0.as_matrix().is_real() && m1.as_matrix().is_real() {
        return Some((m0.clone(), m1.clone()));
    }
    let d = pair.dim();
    let v = &pair.spectrum0().eigenvectors;
    let rotated0 = v.adjoint().matmul(m0.as_matrix()).ok()?.matmul(v).ok()?;
    let rotated1 = v.adjoint().matmul(m1.as_matrix()).ok()?.matmul(v).ok()?;
    let scale = rotated1.max_abs().max(1.0);
    let negligible = 1e-14 * scale;

    // phases θ with arg(ρ₁'_{jk}) = θ_j − θ_k along a spanning forest
    let mut theta: Vec<Option<f64>> = vec![None; d];
    for root in 0..d {
        if theta[root].is_some() {
            continue;
        }
        theta[root] = Some(0.0);
        let mut stack = vec![root];
        while let Some(j) = stack.pop() {
            for k in 0..d {
                let z = rotated1[(j, k)];
                if theta[k].is_none() && z.norm() > negligible {
                    theta[k] = Some(theta[j].unwrap() - z.arg());
                    stack.push(k);
                }
            }
        }
    }
    let phase: Vec<Complex64> = theta
        .iter()
        .map(|t| Complex64::from_polar(1.0, t.unwrap_or(0.0)))
        .collect();

    let mut real0 = vec![0.0; d * d];
    let mut real1 = vec![0.0; d * d];
    for j in 0..d {
        for k in 0..d {
            let a = phase[j].conj() * rotated0[(j, k)] * phase[k];
            let b = phase[j].conj() * rotated1[(j, k)] * phase[k];
            if a.im.abs() > negligible || b.im.abs() > negligible {
                return None;
            }
            real0[j * d + k] = a.re;
            real1[j * d + k] = b.re;
        }
    }
    Some((
        HermitianMatrix::from_real(d, &real0).ok()?,
        HermitianMatrix::from_real(d, &real1).ok()?,
    ))
}

/// `½(1 − ½‖ρ₁^{⊗n} − ρ₀^{⊗n}‖₁)`, the error of the Helstrom test.
pub fn min_error_exact(pair: &StatePair, n: usize) -> Result<f64> {
    copies_dim(pair, n)?;
    let cap = pair.settings().size_cap;
    let (a, b) =
        common_real_frame(pair).unwrap_or_else(|| (pair.rho0().matrix().clone(), pair.rho1().matrix().clone()));
    let mut diff = crate::linalg::tensor_power(b.as_matrix(), n, cap)?;
    {
        let sub = crate::linalg::tensor_power(a.as_matrix(), n, cap)?;
        for (x, y) in diff.as_mut_slice().iter_mut().zip(sub.as_slice()) {
            *x -= y;
        }
    }
    let tn = trace_norm(&HermitianMatrix::new(diff)?)?;
    Ok((0.5 * (1.0 - 0.5 * tn)).clamp(0.0, 0.5))
}

/// Dense reference for [`min_error_exact`] in the original frame, with no
/// change of basis.
pub fn min_error_exact_direct(pair: &StatePair, n: usize) -> Result<f64> {
    copies_dim(pair, n)?;
    let cap = pair.settings().size_cap;
    let diff = &pair.rho1().matrix().tensor_power(n, cap)? - &pair.rho0().matrix().tensor_power(n, cap)?;
    let tn = trace_norm(&diff)?;
    Ok((0.5 * (1.0 - 0.5 * tn)).clamp(0.0, 0.5))
}

#[inline]
fn pow_with_zero_convention(x: f64, s: f64) -> f64 {
    if s == 0.0 {
        1.0
    } else if x == 0.0 {
        0.0
    } else {
        x.powf(s)
    }
}

/// `Â(s) = Tr[ρ₀^{1−s} ρ₁^s] = Σ_{ij} λ_i^{1−s} γ_j^s |⟨x_i|y_j⟩|²`, with
/// `ρ⁰ = 𝟙` so that `Â(0) = Â(1) = 1`.
pub fn a_hat(pair: &StatePair, s: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::invalid(format!("s = {s} outside [0, 1]")));
    }
    if s == 0.0 || s == 1.0 {
        return Ok(1.0);
    }
    let lambda = &pair.spectrum0().eigenvalues;
    let gamma = &pair.spectrum1().eigenvalues;
    let mut acc = 0.0;
    for (i, &l) in lambda.iter().enumerate() {
        let li = pow_with_zero_convention(l, 1.0 - s);
        if li == 0.0 {
            continue;
        }
        for (j, &g) in gamma.iter().enumerate() {
            acc += li * pow_with_zero_convention(g, s) * pair.overlap(i, j);
        }
    }
    Ok(acc.clamp(0.0, 1.0))
}

/// One-sided limits `(Â₊(0), Â₋(1)) = (Tr[ρ₀ supp ρ₁], Tr[supp ρ₀ ρ₁])`.
pub fn a_hat_limits(pair: &StatePair) -> (f64, f64) {
    let lambda = &pair.spectrum0().eigenvalues;
    let gamma = &pair.spectrum1().eigenvalues;
    let (mut at0, mut at1) = (0.0, 0.0);
    for (i, &l) in lambda.iter().enumerate() {
        for (j, &g) in gamma.iter().enumerate() {
            if l > 0.0 && g > 0.0 {
                at0 += l * pair.overlap(i, j);
                at1 += g * pair.overlap(i, j);
            }
        }
    }
    (at0.min(1.0), at1.min(1.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct QcbResult {
    /// `inf_{0≤s≤1} log Tr[ρ₀^{1−s} ρ₁^s]`.
    pub bound: f64,
    pub minimizer: Minimizer,
    pub case: ChernoffCase,
    /// `exp(bound)`.
    pub a_hat_min: f64,
    /// `Â₊(0)` and `Â₋(1)`.
    pub limit_at_zero: f64,
    pub limit_at_one: f64,
}

/// Quantum Chernoff bound, solved as the classical Chernoff problem of the
/// embedded pair (whose affinity coincides with `Â` on `(0, 1)`).
pub fn qcb(pair: &StatePair) -> Result<QcbResult> {
    let ns = ns_distributions(pair)?;
    let res = chernoff(&ns.p, &ns.q)?;
    let (limit_at_zero, limit_at_one) = a_hat_limits(pair);
    Ok(QcbResult {
        bound: res.value,
        minimizer: res.minimizer,
        case: res.case,
        a_hat_min: res.value.exp(),
        limit_at_zero,
        limit_at_one,
    })
}

/// `(Tr[ρ₀ Π₁*], Tr[ρ₁ Π₁*])` for the single-copy Helstrom projection.
pub fn single_copy_outcome_probabilities(pair: &StatePair) -> Result<(f64, f64)> {
    let pi = helstrom_test(pair, 1)?;
    let b0 = pi.matrix.trace_product(pair.rho0().matrix())?.clamp(0.0, 1.0);
    let b1 = pi.matrix.trace_product(pair.rho1().matrix())?.clamp(0.0, 1.0);
    Ok((b0, b1))
}

/// Error of measuring every copy with the single-copy Helstrom projection and
/// deciding by maximum likelihood on the outcome string. Always at least
/// [`min_error_exact`].
pub fn repeated_measurement_upper(pair: &StatePair, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::invalid("number of copies must be at least 1"));
    }
    let (b0, b1) = single_copy_outcome_probabilities(pair)?;
    if b0 == b1 {
        return Ok(0.5);
    }
    product_min_error(
        &DiscreteDistribution::bernoulli(b0)?,
        &DiscreteDistribution::bernoulli(b1)?,
        n,
        Priors::EQUAL,
    )
}

/// Matrix of a test operator built from eigenvalues in `[0, 1]` and a unitary.
pub fn test_from_spectrum(u: &ComplexMatrix, spectrum: &[f64]) -> Result<TestOperator> {
    let d = u.rows();
    let mut m = ComplexMatrix::zeros(d, d);
    for (k, &w) in spectrum.iter().enumerate() {
        for i in 0..d {
            for j in 0..d {
                m[(i, j)] += u[(i, k)] * u[(j, k)].conj() * w;
            }
        }
    }
    TestOperator::new(HermitianMatrix::new(m)?, 1e-10)
}
