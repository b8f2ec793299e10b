//! File formats and number formatting.
//!
//! State files: `{"dim": d, "matrix": [[[re, im], ...], ...]}`, row-major.
//! Distribution files: `{"probs": [...]}`, exact zeros allowed.
//! Reals are written with 17 significant digits; infinities as `-inf` / `inf`.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;

use crate::classical::DiscreteDistribution;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, HermitianMatrix};
use crate::states::DensityMatrix;

/// Largest entrywise asymmetry tolerated in a state file before hermitization.
pub const HERMITICITY_TOLERANCE: f64 = 1e-8;

/// 17-significant-digit rendering used for every emitted real.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x == f64::NEG_INFINITY {
        "-inf".to_string()
    } else if x == f64::INFINITY {
        "inf".to_string()
    } else {
        format!("{x:.16e}")
    }
}

/// Parses the output of [`format_real`].
pub fn parse_real(s: &str) -> Option<f64> {
    match s.trim() {
        "-inf" => Some(f64::NEG_INFINITY),
        "inf" => Some(f64::INFINITY),
        "nan" => Some(f64::NAN),
        other => other.parse().ok(),
    }
}

/// Serializes as a bare JSON number with 17 significant digits, or as a
/// string for non-finite values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            let raw = RawValue::from_string(format_real(self.0)).map_err(serde::ser::Error::custom)?;
            raw.serialize(serializer)
        } else {
            serializer.serialize_str(&format_real(self.0))
        }
    }
}

pub fn reals(xs: &[f64]) -> Vec<Real> {
    xs.iter().copied().map(Real).collect()
}

#[derive(Debug, Deserialize)]
struct StateFileIn {
    dim: usize,
    matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize)]
struct StateFileOut {
    dim: usize,
    matrix: Vec<Vec<[Real; 2]>>,
}

#[derive(Debug, Deserialize)]
struct DistributionFileIn {
    probs: Vec<f64>,
}

#[derive(Serialize)]
struct DistributionFileOut {
    probs: Vec<Real>,
}

pub fn parse_state(json: &str) -> Result<DensityMatrix> {
    let file: StateFileIn = serde_json::from_str(json)?;
    let d = file.dim;
    if d == 0 {
        return Err(Error::invalid("state dimension must be positive"));
    }
    if file.matrix.len() != d || file.matrix.iter().any(|row| row.len() != d) {
        return Err(Error::invalid(format!("state matrix must be {d}x{d}")));
    }
    let data = file
        .matrix
        .iter()
        .flatten()
        .map(|[re, im]| Complex64::new(*re, *im))
        .collect();
    let m = ComplexMatrix::new(d, d, data)?;
    let asym = HermitianMatrix::asymmetry(&m);
    if asym > HERMITICITY_TOLERANCE {
        return Err(Error::invalid(format!(
            "state matrix is not Hermitian (asymmetry {asym:e})"
        )));
    }
    DensityMatrix::new(HermitianMatrix::new(m)?)
}

pub fn state_to_json(rho: &DensityMatrix) -> String {
    let m = rho.matrix().as_matrix();
    let out = StateFileOut {
        dim: rho.dim(),
        matrix: (0..m.rows())
            .map(|i| m.row(i).iter().map(|z| [Real(z.re), Real(z.im)]).collect())
            .collect(),
    };
    serde_json::to_string(&out).expect("state serialization cannot fail")
}

pub fn read_state(path: impl AsRef<Path>) -> Result<DensityMatrix> {
    parse_state(&std::fs::read_to_string(path)?)
}

pub fn write_state(path: impl AsRef<Path>, rho: &DensityMatrix) -> Result<()> {
    std::fs::write(path, state_to_json(rho) + "\n")?;
    Ok(())
}

pub fn parse_distribution(json: &str) -> Result<DiscreteDistribution> {
    let file: DistributionFileIn = serde_json::from_str(json)?;
    DiscreteDistribution::new(file.probs)
}

pub fn distribution_to_json(p: &DiscreteDistribution) -> String {
    serde_json::to_string(&DistributionFileOut {
        probs: reals(p.probs()),
    })
    .expect("distribution serialization cannot fail")
}

pub fn read_distribution(path: impl AsRef<Path>) -> Result<DiscreteDistribution> {
    parse_distribution(&std::fs::read_to_string(path)?)
}

pub fn write_distribution(path: impl AsRef<Path>, p: &DiscreteDistribution) -> Result<()> {
    std::fs::write(path, distribution_to_json(p) + "\n")?;
    Ok(())
}
