//! Dense complex linear algebra: Hermitian eigendecomposition, Kronecker
//! products, and the spectral calculus (positive parts, support projections,
//! fractional powers, trace norm) used by the rest of the crate.

mod jacobi;
mod matrix;
mod tridiag;

pub use jacobi::{eig_hermitian, SpectralDecomposition, JACOBI_MAX_SWEEPS, JACOBI_TOLERANCE};
pub use matrix::{kron, tensor_power, ComplexMatrix, HermitianMatrix, SizeCap};
pub use tridiag::eigenvalues_hermitian;

use crate::error::{Error, Result};

/// Default relative threshold below which eigenvalues count as zero.
pub const DEFAULT_RANK_TOL: f64 = 1e-10;

/// Absolute cut-off for "zero" eigenvalues of a spectrum: `rank_tol · max |λ|`.
pub fn zero_threshold(eigenvalues: &[f64], rank_tol: f64) -> f64 {
    rank_tol * eigenvalues.iter().fold(0.0f64, |m, l| m.max(l.abs()))
}

/// `Σ_{λ>0} λ E_λ`, with eigenvalues inside the rank threshold treated as zero.
pub fn positive_part(h: &HermitianMatrix) -> Result<HermitianMatrix> {
    positive_part_with(h, DEFAULT_RANK_TOL)
}

pub fn positive_part_with(h: &HermitianMatrix, rank_tol: f64) -> Result<HermitianMatrix> {
    let eig = eig_hermitian(h)?;
    let cut = zero_threshold(&eig.eigenvalues, rank_tol);
    Ok(eig.map(|l| if l > cut { l } else { 0.0 }))
}

/// Projection onto the span of eigenvectors with strictly positive eigenvalue.
pub fn support_projection(h: &HermitianMatrix) -> Result<HermitianMatrix> {
    support_projection_with(h, DEFAULT_RANK_TOL)
}

pub fn support_projection_with(h: &HermitianMatrix, rank_tol: f64) -> Result<HermitianMatrix> {
    let eig = eig_hermitian(h)?;
    let cut = zero_threshold(&eig.eigenvalues, rank_tol);
    Ok(eig.map(|l| if l > cut { 1.0 } else { 0.0 }))
}

/// `P^s` for positive semidefinite `P` and `s ∈ [0, 1]`.
///
/// `P^0` is the identity (every eigenvalue, zero included, maps to 1); for
/// `s > 0` eigenvalues inside the rank threshold map to 0.
pub fn frac_power(p: &HermitianMatrix, s: f64) -> Result<HermitianMatrix> {
    frac_power_with(p, s, DEFAULT_RANK_TOL)
}

pub fn frac_power_with(p: &HermitianMatrix, s: f64, rank_tol: f64) -> Result<HermitianMatrix> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::invalid(format!("fractional power exponent {s} outside [0, 1]")));
    }
    let eig = eig_hermitian(p)?;
    let cut = zero_threshold(&eig.eigenvalues, rank_tol);
    if let Some(&min) = eig.eigenvalues.last() {
        if min < -cut {
            return Err(Error::NotPositive { min_eigenvalue: min });
        }
    }
    Ok(eig.map(|l| {
        if s == 0.0 {
            1.0
        } else if l <= cut {
            0.0
        } else if s == 1.0 {
            l
        } else {
            l.powf(s)
        }
    }))
}

/// `‖H‖₁ = Σ |λ_i|`.
pub fn trace_norm(h: &HermitianMatrix) -> Result<f64> {
    Ok(eigenvalues_hermitian(h)?.iter().map(|l| l.abs()).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &HermitianMatrix, b: &HermitianMatrix, tol: f64) -> bool {
        (a - b).as_matrix().max_abs() <= tol
    }

    #[test]
    fn positive_part_examples() {
        let h = HermitianMatrix::from_real_diagonal(&[2.0, -3.0]);
        assert!(close(
            &positive_part(&h).unwrap(),
            &HermitianMatrix::from_real_diagonal(&[2.0, 0.0]),
            0.0
        ));

        let psd = HermitianMatrix::from_real(2, &[0.5, 0.25, 0.25, 0.5]).unwrap();
        assert!(close(&positive_part(&psd).unwrap(), &psd, 1e-15));

        // eigenvalues ±0.25√2; the positive branch survives as a rank-1 matrix
        let h = HermitianMatrix::from_real(2, &[-0.25, 0.25, 0.25, 0.25]).unwrap();
        let pos = positive_part(&h).unwrap();
        let spectrum = eig_hermitian(&pos).unwrap().eigenvalues;
        assert!((spectrum[0] - 0.25 * 2f64.sqrt()).abs() < 1e-15);
        assert!(spectrum[1].abs() < 1e-15);
        let neg = positive_part(&-&h).unwrap();
        assert!(close(&(&pos - &neg), &h, 1e-15));
    }

    #[test]
    fn support_projection_examples() {
        let h = HermitianMatrix::from_real_diagonal(&[2.0, 0.0, -1.0]);
        assert!(close(
            &support_projection(&h).unwrap(),
            &HermitianMatrix::from_real_diagonal(&[1.0, 0.0, 0.0]),
            0.0
        ));
        assert!(close(
            &support_projection(&HermitianMatrix::zeros(3)).unwrap(),
            &HermitianMatrix::zeros(3),
            0.0
        ));
        let full = HermitianMatrix::from_real(2, &[0.5, 0.25, 0.25, 0.5]).unwrap();
        assert!(close(
            &support_projection(&full).unwrap(),
            &HermitianMatrix::identity(2),
            1e-15
        ));
    }

    #[test]
    fn frac_power_examples() {
        let rho = HermitianMatrix::from_real(2, &[0.5, 0.25, 0.25, 0.5]).unwrap();
        assert!(close(
            &frac_power(&rho, 0.0).unwrap(),
            &HermitianMatrix::identity(2),
            1e-15
        ));
        assert!(close(&frac_power(&rho, 1.0).unwrap(), &rho, 1e-15));

        let d = HermitianMatrix::from_real_diagonal(&[0.75, 0.25]);
        let half = frac_power(&d, 0.5).unwrap();
        assert!(close(
            &half,
            &HermitianMatrix::from_real_diagonal(&[0.75f64.sqrt(), 0.5]),
            1e-15
        ));

        let pure = HermitianMatrix::from_real(2, &[0.5, 0.5, 0.5, 0.5]).unwrap();
        for s in [0.1, 0.5, 0.9] {
            assert!(close(&frac_power(&pure, s).unwrap(), &pure, 1e-14));
        }
        // zero eigenvalue stays zero for s > 0 but becomes 1 at s = 0
        let singular = HermitianMatrix::from_real_diagonal(&[1.0, 0.0]);
        assert!(close(&frac_power(&singular, 0.3).unwrap(), &singular, 0.0));
        assert!(close(
            &frac_power(&singular, 0.0).unwrap(),
            &HermitianMatrix::identity(2),
            0.0
        ));
    }

    #[test]
    fn frac_power_rejects_bad_input() {
        let not_psd = HermitianMatrix::from_real_diagonal(&[1.0, -0.5]);
        assert!(matches!(frac_power(&not_psd, 0.5), Err(Error::NotPositive { .. })));
        let d = HermitianMatrix::from_real_diagonal(&[1.0, 0.0]);
        assert!(frac_power(&d, 1.5).is_err());
    }

    #[test]
    fn trace_norm_examples() {
        assert_eq!(trace_norm(&HermitianMatrix::zeros(2)).unwrap(), 0.0);
        assert_eq!(
            trace_norm(&HermitianMatrix::from_real_diagonal(&[2.0, -3.0])).unwrap(),
            5.0
        );
        let rho0 = HermitianMatrix::from_real_diagonal(&[0.75, 0.25]);
        let rho1 = HermitianMatrix::from_real(2, &[0.5, 0.25, 0.25, 0.5]).unwrap();
        let tn = trace_norm(&(&rho1 - &rho0)).unwrap();
        assert!((tn - 0.5 * 2f64.sqrt()).abs() < 1e-15);
    }
}
