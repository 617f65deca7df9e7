//! Numerical tolerances shared across the crate.
//!
//! The three main levels sit one decade apart so that construction noise,
//! decomposition error and algorithmic disagreement can be told apart.

/// Input validation: Hermiticity, unit trace, positivity floor.
pub const VALIDATION: f64 = 1e-10;

/// Decomposition round trips (eigen reconstruction, unitarity, orthogonality).
pub const RECONSTRUCTION: f64 = 1e-9;

/// Agreement between an implementation and an independent oracle.
pub const ORACLE: f64 = 1e-8;

/// Pairs of eigenvalues (or Schmidt / Bell coefficients) whose sum falls
/// below this floor carry no information and are skipped.
pub const DEGENERACY_FLOOR: f64 = 1e-12;

/// Allowed deviation from unit norm for pure-state vectors.
pub const NORM: f64 = 1e-8;
