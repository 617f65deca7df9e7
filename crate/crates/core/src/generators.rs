//! Hermitian generator bases of `u(d)`.
//!
//! The basis is the generalized Gell-Mann set (symmetric, antisymmetric and
//! diagonal families) completed by a scaled identity, normalized so that
//! `Tr(T_a T_b) = 2 δ_ab`. For `d = 2` it is `{σx, σy, σz, I}`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::linalg::{embed, CMatrix, Observable, I, ONE};
use crate::{tol, Error, Result};

/// `Tr(T_a T_a)` for every element of the bases built here.
pub const NORMALIZATION: f64 = 2.0;

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorBasis {
    dim: usize,
    elements: Vec<Observable>,
}

impl GeneratorBasis {
    /// Wraps an arbitrary list of `d²` observables after checking
    /// `Tr(T_a T_b) = 2 δ_ab` within `tolerance`.
    pub fn from_elements(dim: usize, elements: Vec<Observable>, tolerance: f64) -> Result<Self> {
        if elements.len() != dim * dim {
            return Err(Error::InvalidBasis(format!(
                "expected {} elements for d = {dim}, got {}",
                dim * dim,
                elements.len()
            )));
        }
        if let Some(bad) = elements.iter().find(|t| t.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        let basis = Self { dim, elements };
        let dev = basis.gram_deviation();
        if dev > tolerance {
            return Err(Error::InvalidBasis(format!(
                "Gram matrix deviates from 2I by {dev:e}"
            )));
        }
        Ok(basis)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[Observable] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Matrix of Hilbert-Schmidt inner products `Tr(T_a T_b)`.
    pub fn gram(&self) -> DMatrix<f64> {
        let n = self.elements.len();
        DMatrix::from_fn(n, n, |a, b| self.elements[a].hs_inner(&self.elements[b]))
    }

    /// `max |Gram − 2I|`.
    pub fn gram_deviation(&self) -> f64 {
        let n = self.elements.len();
        (self.gram() - DMatrix::<f64>::identity(n, n).scale(NORMALIZATION))
            .abs()
            .max()
    }
}

impl AsRef<[Observable]> for GeneratorBasis {
    fn as_ref(&self) -> &[Observable] {
        &self.elements
    }
}

fn unit(d: usize, i: usize, j: usize) -> CMatrix {
    let mut m = CMatrix::zeros(d, d);
    m[(i, j)] = ONE;
    m
}

/// Generalized Gell-Mann basis of `u(d)` plus `√(2/d)·I`.
///
/// Ordering: all symmetric elements `|i⟩⟨j| + |j⟩⟨i|` (pairs `i < j` in
/// lexicographic order), then the antisymmetric `−i|i⟩⟨j| + i|j⟩⟨i|` in the
/// same order, then the `d − 1` diagonal elements, then the identity.
pub fn gell_mann_basis(d: usize) -> Result<GeneratorBasis> {
    if d == 0 {
        return Err(Error::InvalidParameter {
            name: "d",
            value: 0.0,
            reason: "dimension must be at least 1",
        });
    }
    let mut elements = Vec::with_capacity(d * d);
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
        .collect();
    for &(i, j) in &pairs {
        elements.push(unit(d, i, j) + unit(d, j, i));
    }
    for &(i, j) in &pairs {
        elements.push(unit(d, i, j) * (-I) + unit(d, j, i) * I);
    }
    // diagonal family, l = 2..=d in one-based labels
    for l in 2..=d {
        let scale = (2.0 / (l * (l - 1)) as f64).sqrt();
        let mut m = CMatrix::zeros(d, d);
        for k in 0..l - 1 {
            m[(k, k)] = Complex64::new(scale, 0.0);
        }
        m[(l - 1, l - 1)] = Complex64::new(-scale * (l - 1) as f64, 0.0);
        elements.push(m);
    }
    elements.push(CMatrix::identity(d, d).scale((2.0 / d as f64).sqrt()));

    let elements = elements
        .into_iter()
        .map(Observable::new)
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorBasis { dim: d, elements })
}

/// Embeds every basis element at position `slot` of a composite space,
/// `I ⊗ … ⊗ T ⊗ … ⊗ I`.
pub fn lift(basis: &GeneratorBasis, slot: usize, dims: &[usize]) -> Result<Vec<Observable>> {
    match dims.get(slot) {
        Some(&d) if d == basis.dim() => {}
        Some(&d) => {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: basis.dim(),
            })
        }
        None => {
            return Err(Error::InvalidSubsystem(format!(
                "slot {slot} out of range for {} subsystems",
                dims.len()
            )))
        }
    }
    basis
        .elements()
        .iter()
        .map(|t| Observable::new(embed(t.matrix(), slot, dims)?))
        .collect()
}

/// Recombines a basis with a real orthogonal matrix: `T'_b = Σ_a O_ab T_a`.
pub fn rotate_basis(basis: &GeneratorBasis, o: &DMatrix<f64>) -> Result<GeneratorBasis> {
    let n = basis.len();
    if o.nrows() != n || o.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: o.nrows(),
        });
    }
    let deviation = (o.transpose() * o - DMatrix::<f64>::identity(n, n))
        .abs()
        .max();
    if deviation > tol::RECONSTRUCTION {
        return Err(Error::NotOrthogonal { deviation });
    }
    let d = basis.dim();
    let elements = (0..n)
        .map(|b| {
            let mut acc = CMatrix::zeros(d, d);
            for (a, t) in basis.elements().iter().enumerate() {
                acc += t.matrix().scale(o[(a, b)]);
            }
            Observable::new(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    GeneratorBasis::from_elements(d, elements, tol::RECONSTRUCTION)
}
