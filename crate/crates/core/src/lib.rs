//! Quantum and classical Chernoff bounds for binary hypothesis testing.
//!
//! The crate computes the exact minimal error of discriminating
//! `ρ₀^{⊗n}` from `ρ₁^{⊗n}`, the quantum Chernoff bound
//! `inf_s log Tr[ρ₀^{1−s} ρ₁^s]`, the classical Chernoff problem with its
//! full case analysis for distributions with unequal supports, and the
//! classical embedding that turns a quantum pair into a pair of
//! distributions on `d²` atoms.

pub mod classical;
pub mod error;
pub mod harness;
pub mod io;
pub mod linalg;
pub mod nsmap;
pub mod quantum;
pub mod settings;
pub mod states;

pub use error::{Error, Result};
pub use settings::Settings;
pub use states::{DensityMatrix, StatePair};
