//! Quantum Fisher information, symmetric logarithmic derivative and variance.
//!
//! The QFI convention here is
//!
//! ```text
//! F(ρ, K) = ½ Σ_{i≠j} (p_i − p_j)² / (p_i + p_j) · |⟨ψ_i|K|ψ_j⟩|²
//! ```
//!
//! with `ρ = Σ p_i |ψ_i⟩⟨ψ_i|`. It coincides with the variance of `K` for pure
//! states and is one quarter of the `2Σ…` normalization common in metrology.

use num_complex::Complex64;

use crate::linalg::{hermitian_eig, CMatrix, DensityMatrix, Observable, I};
use crate::{tol, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QfiResult {
    pub value: f64,
    /// Unordered eigenvalue pairs `i < j` dropped because `p_i + p_j` fell
    /// below [`tol::DEGENERACY_FLOOR`].
    pub skipped_pairs: usize,
}

/// Eigendecomposition of a state, prepared once and reused for any number of
/// observables.
#[derive(Debug, Clone)]
pub struct Spectrum {
    probs: Vec<f64>,
    vectors: CMatrix,
}

impl Spectrum {
    pub fn new(rho: &DensityMatrix) -> Result<Self> {
        let eig = hermitian_eig(rho.matrix())?;
        let mut probs: Vec<f64> = eig.values.iter().map(|p| p.clamp(0.0, 1.0)).collect();
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > tol::DEGENERACY_FLOOR {
            probs.iter_mut().for_each(|p| *p /= total);
        }
        Ok(Self {
            probs,
            vectors: eig.vectors,
        })
    }

    /// Eigenvalues, ascending, clamped to `[0, 1]`.
    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    pub fn dim(&self) -> usize {
        self.probs.len()
    }

    /// `K` expressed in the eigenbasis of the state, `V† K V`.
    fn rotate(&self, k: &Observable) -> Result<CMatrix> {
        if k.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: k.dim(),
            });
        }
        Ok(self.vectors.adjoint() * k.matrix() * &self.vectors)
    }

    pub fn qfi(&self, k: &Observable) -> Result<QfiResult> {
        let kk = self.rotate(k)?;
        let p = &self.probs;
        let mut value = 0.0;
        let mut skipped_pairs = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                let sum = p[i] + p[j];
                if sum < tol::DEGENERACY_FLOOR {
                    skipped_pairs += 1;
                    continue;
                }
                let diff = p[i] - p[j];
                // the ½ cancels against the (i, j) / (j, i) symmetry
                value += diff * diff / sum * kk[(i, j)].norm_sqr();
            }
        }
        debug_assert!(value >= 0.0);
        Ok(QfiResult {
            value,
            skipped_pairs,
        })
    }

    pub fn sld(&self, k: &Observable) -> Result<Observable> {
        let kk = self.rotate(k)?;
        let p = &self.probs;
        let n = p.len();
        let mut l = CMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let sum = p[i] + p[j];
                if sum < tol::DEGENERACY_FLOOR {
                    continue;
                }
                // (i[K, ρ])_ij = i (p_j − p_i) K_ij in the eigenbasis
                let drho = I * (p[j] - p[i]) * kk[(i, j)];
                l[(i, j)] = drho * (2.0 / sum);
            }
        }
        let l = &self.vectors * l * self.vectors.adjoint();
        Observable::new((&l + l.adjoint()).scale(0.5))
    }
}

fn check_dims(rho: &DensityMatrix, k: &Observable) -> Result<()> {
    if rho.dim() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: k.dim(),
        });
    }
    Ok(())
}

pub fn qfi(rho: &DensityMatrix, k: &Observable) -> Result<QfiResult> {
    check_dims(rho, k)?;
    Spectrum::new(rho)?.qfi(k)
}

/// QFI for every observable in `basis`, sharing one eigendecomposition.
pub fn qfi_batch(rho: &DensityMatrix, basis: &[Observable]) -> Result<Vec<f64>> {
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let spectrum = Spectrum::new(rho)?;
    basis
        .iter()
        .map(|k| spectrum.qfi(k).map(|r| r.value))
        .collect()
}

/// Symmetric logarithmic derivative `L` of the family `e^{iθK} ρ e^{−iθK}` at
/// `θ = 0`, solving `i[K, ρ] = (ρL + Lρ)/2` on the support of `ρ`. Entries on
/// the kernel block are set to zero.
pub fn sld(rho: &DensityMatrix, k: &Observable) -> Result<Observable> {
    check_dims(rho, k)?;
    Spectrum::new(rho)?.sld(k)
}

/// `Tr(ρK²) − Tr(ρK)²`, clamped at zero.
pub fn variance(rho: &DensityMatrix, k: &Observable) -> Result<f64> {
    check_dims(rho, k)?;
    let rk = rho.matrix() * k.matrix();
    let mean = rk.trace().re;
    let second = (&rk * k.matrix()).trace().re;
    Ok((second - mean * mean).max(0.0))
}

/// `(1/4) Tr(ρ L²)`, the QFI computed from the SLD.
pub fn qfi_from_sld(rho: &DensityMatrix, l: &Observable) -> Result<f64> {
    check_dims(rho, l)?;
    let rl = rho.matrix() * l.matrix();
    let v: Complex64 = (rl * l.matrix()).trace();
    Ok(0.25 * v.re)
}
