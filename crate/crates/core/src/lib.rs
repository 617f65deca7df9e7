//! Quantum Fisher information (QFI), QFI-based asymmetry of quantum states and
//! the correlation measure induced by the gap between global and local
//! asymmetry.
//!
//! Conventions used throughout the crate:
//!
//! * QFI is `F(ρ, K) = ½ Σ_{i≠j} (p_i − p_j)² / (p_i + p_j) |⟨ψ_i|K|ψ_j⟩|²`,
//!   which equals the variance of `K` on pure states.
//! * Generator bases of `u(d)` are normalized to `Tr(T_a T_b) = 2 δ_ab`
//!   (Pauli / Gell-Mann scale) and the asymmetry is `A = ¼ Σ_j F(ρ, T_j)`.
//! * Composite spaces are ordered with the first factor most significant, so
//!   `kron(a, b)` acts on `|i⟩_a|j⟩_b` at index `i·d_b + j`.

pub mod asymmetry;
pub mod channels;
pub mod correlation;
mod error;
pub mod generators;
pub mod linalg;
pub mod qfi;
pub mod tol;

pub use error::{Error, Result};

pub use asymmetry::{AsymmetryReport, Side};
pub use channels::KrausChannel;
pub use correlation::{BellDiagonalParams, CorrelationReport, SchmidtData};
pub use generators::GeneratorBasis;
pub use linalg::{CMatrix, CVector, DensityMatrix, EigenSystem, Observable};
pub use qfi::QfiResult;

pub use nalgebra;
pub use num_complex::Complex64;
