use crate::linalg::{SizeCap, DEFAULT_RANK_TOL};

/// Numerical knobs shared by the quantum side of the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    /// Eigenvalues with `|λ| ≤ rank_tol · max|λ|` count as zero (supports, `0^s`, Helstrom ties).
    pub rank_tol: f64,
    /// Largest matrix dimension `d^n` that will be materialized.
    pub size_cap: SizeCap,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            rank_tol: DEFAULT_RANK_TOL,
            size_cap: SizeCap::DEFAULT,
        }
    }
}
