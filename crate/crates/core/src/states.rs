//! Density matrices: validation, seeded random states, and cached state pairs.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, zero_threshold, ComplexMatrix, HermitianMatrix, SpectralDecomposition};
use crate::settings::Settings;

/// Eigenvalues below this are rejected outright.
pub const NEGATIVE_EIGENVALUE_LIMIT: f64 = -1e-8;
/// Largest accepted trace deviation before renormalization.
pub const TRACE_TOLERANCE: f64 = 1e-6;
/// Frobenius threshold for `‖ρ₀ρ₁ − ρ₁ρ₀‖`.
pub const COMMUTATOR_TOLERANCE: f64 = 1e-10;

/// Positive semidefinite Hermitian matrix of unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: HermitianMatrix,
}

impl DensityMatrix {
    /// Validates `m`, clipping tiny negative eigenvalues and renormalizing the trace.
    pub fn new(m: HermitianMatrix) -> Result<Self> {
        validate_density(m)
    }

    pub fn from_diagonal(probs: &[f64]) -> Result<Self> {
        Self::new(HermitianMatrix::from_real_diagonal(probs))
    }

    /// `|ψ⟩⟨ψ| / ⟨ψ|ψ⟩`.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if psi.is_empty() || norm2 == 0.0 || !norm2.is_finite() {
            return Err(Error::invalid("pure state vector must be nonzero"));
        }
        let scaled: Vec<Complex64> = psi.iter().map(|z| z / norm2.sqrt()).collect();
        Self::new(HermitianMatrix::projector(&scaled))
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> HermitianMatrix {
        self.matrix
    }

    /// `ρ^{⊗n}` as a density matrix (products of valid states stay valid).
    pub fn tensor_power(&self, n: usize, settings: &Settings) -> Result<DensityMatrix> {
        Ok(DensityMatrix {
            matrix: self.matrix.tensor_power(n, settings.size_cap)?,
        })
    }

    /// Conjugation `U ρ U†` by a unitary.
    pub fn conjugate(&self, u: &ComplexMatrix) -> Result<DensityMatrix> {
        let m = u.matmul(self.matrix.as_matrix())?.matmul(&u.adjoint())?;
        Self::new(HermitianMatrix::new(m)?)
    }
}

/// Accepts a Hermitian matrix as a state.
///
/// Eigenvalues in `[-1e-8, 0)` are set to zero (those above `-1e-12·‖ρ‖_F`
/// are left to rounding) and the trace is renormalized
/// when it is within `1e-6` of one; anything worse is rejected.
pub fn validate_density(m: HermitianMatrix) -> Result<DensityMatrix> {
    let eig = eig_hermitian(&m)?;
    let min = eig.eigenvalues.last().copied().unwrap_or(0.0);
    if min < NEGATIVE_EIGENVALUE_LIMIT {
        return Err(Error::NotPositive { min_eigenvalue: min });
    }
    let trace = m.trace();
    if (trace - 1.0).abs() > TRACE_TOLERANCE {
        return Err(Error::Trace {
            trace,
            tolerance: TRACE_TOLERANCE,
        });
    }
    // negative eigenvalues within the eigensolver's own resolution are not
    // worth a reconstruction, which would add more error than it removes
    let resolution = crate::linalg::JACOBI_TOLERANCE * m.as_matrix().frobenius_norm();
    let matrix = if min < -resolution {
        let clipped_sum: f64 = eig.eigenvalues.iter().map(|l| l.max(0.0)).sum();
        eig.map(|l| l.max(0.0) / clipped_sum)
    } else if trace != 1.0 {
        m.scale(1.0 / trace)
    } else {
        m
    };
    Ok(DensityMatrix { matrix })
}

/// Haar-like random unitary: Gram–Schmidt on a standard complex Gaussian matrix.
pub fn random_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    while cols.len() < d {
        let mut v: Vec<Complex64> = (0..d)
            .map(|_| {
                let re: f64 = StandardNormal.sample(rng);
                let im: f64 = StandardNormal.sample(rng);
                Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
            })
            .collect();
        // two passes of modified Gram–Schmidt
        for _ in 0..2 {
            for u in &cols {
                let proj: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= proj * ui;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-8 {
            continue;
        }
        cols.push(v.into_iter().map(|z| z / norm).collect());
    }
    let mut u = ComplexMatrix::zeros(d, d);
    for (j, col) in cols.iter().enumerate() {
        for (i, z) in col.iter().enumerate() {
            u[(i, j)] = *z;
        }
    }
    u
}

/// Point drawn uniformly from the probability simplex on `k` coordinates.
pub fn random_simplex<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Vec<f64> {
    let raw: Vec<f64> = (0..k).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / total).collect()
}

/// Seeded random state of dimension `d` and rank `rank`.
pub fn random_density(d: usize, rank: usize, seed: u64) -> Result<DensityMatrix> {
    if d == 0 || rank == 0 || rank > d {
        return Err(Error::invalid(format!("need 1 <= rank <= d, got d={d}, rank={rank}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = random_unitary(d, &mut rng);
    let weights = random_simplex(rank, &mut rng);
    random_density_from(&u, &weights)
}

/// `Σ_k w_k |u_k⟩⟨u_k|` over the first `weights.len()` columns of `u`.
pub(crate) fn random_density_from(u: &ComplexMatrix, weights: &[f64]) -> Result<DensityMatrix> {
    let d = u.rows();
    let mut m = ComplexMatrix::zeros(d, d);
    for (k, &w) in weights.iter().enumerate() {
        let col = u.column(k);
        for i in 0..d {
            for j in 0..d {
                m[(i, j)] += col[i] * col[j].conj() * w;
            }
        }
    }
    DensityMatrix::new(HermitianMatrix::new(m)?)
}

/// Two states of equal dimension together with their cached spectral data.
///
/// Cached eigenvalues inside the rank threshold are stored as exact zeros.
#[derive(Debug, Clone)]
pub struct StatePair {
    rho0: DensityMatrix,
    rho1: DensityMatrix,
    eig0: SpectralDecomposition,
    eig1: SpectralDecomposition,
    /// `|⟨x_i|y_j⟩|²`, row-major in `(i, j)`.
    overlaps: Vec<f64>,
    settings: Settings,
}

impl StatePair {
    pub fn new(rho0: DensityMatrix, rho1: DensityMatrix) -> Result<Self> {
        Self::with_settings(rho0, rho1, Settings::default())
    }

    pub fn with_settings(rho0: DensityMatrix, rho1: DensityMatrix, settings: Settings) -> Result<Self> {
        if rho0.dim() != rho1.dim() {
            return Err(Error::DimensionMismatch {
                expected: rho0.dim(),
                found: rho1.dim(),
            });
        }
        let eig0 = cleaned_decomposition(&rho0, settings.rank_tol)?;
        let eig1 = cleaned_decomposition(&rho1, settings.rank_tol)?;
        let d = rho0.dim();
        let mut overlaps = vec![0.0; d * d];
        for i in 0..d {
            for j in 0..d {
                let amp: Complex64 = (0..d)
                    .map(|k| eig0.eigenvectors[(k, i)].conj() * eig1.eigenvectors[(k, j)])
                    .sum();
                overlaps[i * d + j] = amp.norm_sqr();
            }
        }
        Ok(StatePair {
            rho0,
            rho1,
            eig0,
            eig1,
            overlaps,
            settings,
        })
    }

    pub fn dim(&self) -> usize {
        self.rho0.dim()
    }

    pub fn rho0(&self) -> &DensityMatrix {
        &self.rho0
    }

    pub fn rho1(&self) -> &DensityMatrix {
        &self.rho1
    }

    /// Spectral data `(λ_i, x_i)` of ρ₀.
    pub fn spectrum0(&self) -> &SpectralDecomposition {
        &self.eig0
    }

    /// Spectral data `(γ_j, y_j)` of ρ₁.
    pub fn spectrum1(&self) -> &SpectralDecomposition {
        &self.eig1
    }

    /// `|⟨x_i|y_j⟩|²`.
    pub fn overlap(&self, i: usize, j: usize) -> f64 {
        self.overlaps[i * self.dim() + j]
    }

    pub fn settings(&self) -> &Settings {
        &self.settings
    }

    /// The pair with hypotheses exchanged.
    pub fn swapped(&self) -> Result<StatePair> {
        StatePair::with_settings(self.rho1.clone(), self.rho0.clone(), self.settings)
    }

    /// `(ρ₀^{⊗n}, ρ₁^{⊗n})`.
    pub fn tensor_power(&self, n: usize) -> Result<StatePair> {
        StatePair::with_settings(
            self.rho0.tensor_power(n, &self.settings)?,
            self.rho1.tensor_power(n, &self.settings)?,
            self.settings,
        )
    }
}

fn cleaned_decomposition(rho: &DensityMatrix, rank_tol: f64) -> Result<SpectralDecomposition> {
    let mut eig = eig_hermitian(rho.matrix())?;
    let cut = zero_threshold(&eig.eigenvalues, rank_tol);
    for l in eig.eigenvalues.iter_mut() {
        if *l <= cut {
            *l = 0.0;
        }
    }
    Ok(eig)
}

/// Frobenius norm of the commutator `ρ₀ρ₁ − ρ₁ρ₀`.
pub fn commutator_norm(pair: &StatePair) -> f64 {
    let a = pair.rho0.matrix().as_matrix();
    let b = pair.rho1.matrix().as_matrix();
    (&(a * b) - &(b * a)).frobenius_norm()
}

pub fn commutes(pair: &StatePair) -> bool {
    commutator_norm(pair) <= COMMUTATOR_TOLERANCE
}
