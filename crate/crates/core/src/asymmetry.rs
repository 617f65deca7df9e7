//! Asymmetry of states as averaged QFI over a generator basis,
//! `A(ρ, L) = ¼ Σ_j F(ρ, T_j)`, for single systems, bipartite and
//! multipartite states, plus detectors for symmetric (free) states and
//! covariant channels.

use rand::Rng;

use crate::channels::KrausChannel;
use crate::generators::{gell_mann_basis, lift};
use crate::linalg::{
    commutator, random_density_matrix, unitary_from_generator, CMatrix, DensityMatrix, Observable,
};
use crate::qfi::Spectrum;
use crate::{Error, Result};

/// One side of a bipartite split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn slot(self) -> usize {
        match self {
            Side::A => 0,
            Side::B => 1,
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymmetryReport {
    /// `¼ Σ per_generator`.
    pub total: f64,
    /// QFI of the state with respect to each generator, in basis order.
    pub per_generator: Vec<f64>,
}

impl AsymmetryReport {
    pub fn from_qfi(per_generator: Vec<f64>) -> Self {
        let total = 0.25 * per_generator.iter().sum::<f64>();
        Self {
            total,
            per_generator,
        }
    }
}

/// `¼ Σ_j F(ρ, T_j)` over an arbitrary list of observables.
pub fn asymmetry(rho: &DensityMatrix, generators: &[Observable]) -> Result<AsymmetryReport> {
    if let Some(bad) = generators.iter().find(|t| t.dim() != rho.dim()) {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: bad.dim(),
        });
    }
    let spectrum = Spectrum::new(rho)?;
    let per_generator = generators
        .iter()
        .map(|t| spectrum.qfi(t).map(|r| r.value))
        .collect::<Result<Vec<_>>>()?;
    Ok(AsymmetryReport::from_qfi(per_generator))
}

fn view(rho: &DensityMatrix, dims: &[usize]) -> Result<DensityMatrix> {
    if dims.len() < 2 {
        return Err(Error::InvalidSubsystem(format!(
            "need at least two subsystems, got {dims:?}"
        )));
    }
    rho.with_dims(dims)
}

/// Asymmetry of the global state with respect to the `u(d)` basis of one
/// subsystem, lifted to the full space.
pub fn lifted_asymmetry_slot(
    rho: &DensityMatrix,
    dims: &[usize],
    slot: usize,
) -> Result<AsymmetryReport> {
    let rho = view(rho, dims)?;
    let d = *dims
        .get(slot)
        .ok_or_else(|| Error::InvalidSubsystem(format!("slot {slot} out of range for {dims:?}")))?;
    let lifted = lift(&gell_mann_basis(d)?, slot, dims)?;
    asymmetry(&rho, &lifted)
}

/// Asymmetry of the reduced state of one subsystem with respect to its own
/// `u(d)` basis.
pub fn local_asymmetry_slot(
    rho: &DensityMatrix,
    dims: &[usize],
    slot: usize,
) -> Result<AsymmetryReport> {
    let rho = view(rho, dims)?;
    let reduced = crate::linalg::partial_trace(&rho, &[slot])?;
    asymmetry(&reduced, gell_mann_basis(reduced.dim())?.elements())
}

pub fn lifted_asymmetry(
    rho: &DensityMatrix,
    dims: [usize; 2],
    side: Side,
) -> Result<AsymmetryReport> {
    lifted_asymmetry_slot(rho, &dims, side.slot())
}

pub fn local_asymmetry(
    rho: &DensityMatrix,
    dims: [usize; 2],
    side: Side,
) -> Result<AsymmetryReport> {
    local_asymmetry_slot(rho, &dims, side.slot())
}

/// `Σ_i A(ρ, L^{a_i})` over every subsystem; `per_generator` lists the lifted
/// QFIs slot by slot.
pub fn multipartite_asymmetry(rho: &DensityMatrix, dims: &[usize]) -> Result<AsymmetryReport> {
    view(rho, dims)?;
    let mut total = 0.0;
    let mut per_generator = Vec::new();
    for slot in 0..dims.len() {
        let r = lifted_asymmetry_slot(rho, dims, slot)?;
        total += r.total;
        per_generator.extend(r.per_generator);
    }
    Ok(AsymmetryReport {
        total,
        per_generator,
    })
}

/// Asymmetry of a bipartite state with respect to the local unitary group,
/// `A(ρ, L^a) + A(ρ, L^b)`.
pub fn bipartite_asymmetry(rho: &DensityMatrix, dims: [usize; 2]) -> Result<AsymmetryReport> {
    multipartite_asymmetry(rho, &dims)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryCheck {
    pub symmetric: bool,
    /// `max_j ‖[ρ, T_j]‖_F`.
    pub max_commutator_norm: f64,
}

/// Whether `ρ` commutes with every generator within `tol` (Frobenius norm).
pub fn is_symmetric_state(
    rho: &DensityMatrix,
    generators: &[Observable],
    tol: f64,
) -> SymmetryCheck {
    let max_commutator_norm = generators
        .iter()
        .filter(|t| t.dim() == rho.dim())
        .map(|t| commutator(rho.matrix(), t.matrix()).norm())
        .fold(0.0, f64::max);
    let mismatched = generators.iter().any(|t| t.dim() != rho.dim());
    SymmetryCheck {
        symmetric: !mismatched && max_commutator_norm <= tol,
        max_commutator_norm: if mismatched {
            f64::INFINITY
        } else {
            max_commutator_norm
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceCheck {
    pub covariant: bool,
    /// Largest `‖E(UρU†) − U E(ρ) U†‖_F` seen over the samples.
    pub max_deviation: f64,
}

/// Monte-Carlo test of `E(UρU†) = U E(ρ) U†` for `U = exp(iθT_j)`.
///
/// Each generator is probed at `θ = π/2` first, then at `samples` random
/// `(θ, j, ρ)` draws. A `true` verdict is evidence, not a proof.
pub fn is_covariant_channel<R: Rng + ?Sized>(
    channel: &KrausChannel,
    generators: &[Observable],
    samples: usize,
    tol: f64,
    rng: &mut R,
) -> Result<CovarianceCheck> {
    let d = channel.dim();
    if let Some(bad) = generators.iter().find(|t| t.dim() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: bad.dim(),
        });
    }
    let deviation = |t: &Observable, theta: f64, rho: &CMatrix| -> Result<f64> {
        let u = unitary_from_generator(t.matrix(), theta)?;
        let lhs = channel.apply_matrix(&(&u * rho * u.adjoint()));
        let rhs = &u * channel.apply_matrix(rho) * u.adjoint();
        Ok((lhs - rhs).norm())
    };

    let mut max_deviation: f64 = 0.0;
    for t in generators {
        let rho = random_density_matrix(&[d], None, rng);
        max_deviation = max_deviation.max(deviation(t, std::f64::consts::FRAC_PI_2, rho.matrix())?);
    }
    if !generators.is_empty() {
        for _ in 0..samples {
            let j = rng.random_range(0..generators.len());
            let theta = rng.random_range(0.0..std::f64::consts::TAU);
            let rho = random_density_matrix(&[d], None, rng);
            max_deviation = max_deviation.max(deviation(&generators[j], theta, rho.matrix())?);
        }
    }
    Ok(CovarianceCheck {
        covariant: max_deviation <= tol,
        max_deviation,
    })
}
