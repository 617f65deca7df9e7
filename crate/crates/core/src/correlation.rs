//! The asymmetry-induced correlation measure
//!
//! ```text
//! Q(ρ) = Σ_i [ A(ρ, L^{a_i}) − A(ρ_{a_i}, L^{a_i}) ]
//! ```
//!
//! i.e. how much more asymmetric the global state is with respect to each
//! local unitary group than the corresponding reduced state. Closed forms are
//! provided for pure states (in terms of Schmidt coefficients) and for
//! Bell-diagonal two-qubit states.

use crate::asymmetry::{bipartite_asymmetry, lifted_asymmetry_slot, local_asymmetry_slot, Side};
use crate::linalg::{
    identity, kron, partial_trace, pauli_x, pauli_y, pauli_z, svd_coefficients, CVector,
    DensityMatrix,
};
use crate::{tol, Error, Result};

/// Probability vector of Schmidt coefficients `λ_i` (squared singular values),
/// kept in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtData {
    coefficients: Vec<f64>,
}

impl SchmidtData {
    /// Accepts coefficients in any order; entries within
    /// [`tol::DEGENERACY_FLOOR`] below zero are clamped.
    pub fn new(mut coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::InvalidSchmidt("no coefficients".into()));
        }
        for c in coefficients.iter_mut() {
            if !c.is_finite() || *c < -tol::DEGENERACY_FLOOR || *c > 1.0 + tol::VALIDATION {
                return Err(Error::InvalidSchmidt(format!(
                    "coefficient {c} outside [0, 1]"
                )));
            }
            *c = c.clamp(0.0, 1.0);
        }
        let sum: f64 = coefficients.iter().sum();
        if (sum - 1.0).abs() > tol::VALIDATION {
            return Err(Error::InvalidSchmidt(format!("coefficients sum to {sum}")));
        }
        coefficients.sort_by(|a, b| b.total_cmp(a));
        Ok(Self { coefficients })
    }

    /// Schmidt coefficients of a bipartite pure state.
    pub fn from_state(psi: &CVector, dims: [usize; 2]) -> Result<Self> {
        let sv = svd_coefficients(psi, dims)?;
        let squares: Vec<f64> = sv.iter().map(|s| s * s).collect();
        let sum: f64 = squares.iter().sum();
        // the norm check upstream allows 1e-8, renormalize to the exact simplex
        Self::new(squares.iter().map(|s| s / sum).collect())
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

/// `true` if `x` majorizes `y`: the partial sums of `x` (descending) dominate
/// those of `y`. Shorter vectors are padded with zeros.
pub fn majorizes(x: &SchmidtData, y: &SchmidtData) -> bool {
    let n = x.len().max(y.len());
    let get = |v: &SchmidtData, i: usize| v.coefficients.get(i).copied().unwrap_or(0.0);
    let (mut sx, mut sy) = (0.0, 0.0);
    for i in 0..n {
        sx += get(x, i);
        sy += get(y, i);
        if sx < sy - 1e-12 {
            return false;
        }
    }
    true
}

/// Correlation measure split by subsystem.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationReport {
    /// Sum of `per_slot`.
    pub q_total: f64,
    /// `A(ρ, L^{a_i}) − A(ρ_{a_i}, L^{a_i})` for each subsystem.
    pub per_slot: Vec<f64>,
}

impl CorrelationReport {
    pub fn side(&self, side: Side) -> f64 {
        self.per_slot[side.slot()]
    }

    pub fn q_side_a(&self) -> f64 {
        self.per_slot[0]
    }

    pub fn q_side_b(&self) -> f64 {
        self.per_slot[1]
    }
}

/// Correlation measure of an `n`-partite state, one term per subsystem.
pub fn multipartite_q(rho: &DensityMatrix, dims: &[usize]) -> Result<CorrelationReport> {
    let mut per_slot = Vec::with_capacity(dims.len());
    for slot in 0..dims.len() {
        let global = lifted_asymmetry_slot(rho, dims, slot)?.total;
        let local = local_asymmetry_slot(rho, dims, slot)?.total;
        per_slot.push(global - local);
    }
    if per_slot.len() < 2 {
        return Err(Error::InvalidSubsystem(format!(
            "need at least two subsystems, got {dims:?}"
        )));
    }
    let q_total = per_slot.iter().sum();
    Ok(CorrelationReport { q_total, per_slot })
}

/// `Q(ρ) = Q^a(ρ) + Q^b(ρ)` for a bipartite state.
pub fn q_measure(rho: &DensityMatrix, dims: [usize; 2]) -> Result<CorrelationReport> {
    multipartite_q(rho, &dims)
}

/// The same measure through the product-state route,
/// `A(ρ, L^{ab}) − A(ρ_a ⊗ ρ_b, L^{ab})`.
pub fn q_via_product(rho: &DensityMatrix, dims: [usize; 2]) -> Result<f64> {
    let rho = rho.with_dims(&dims)?;
    let ra = partial_trace(&rho, &[0])?;
    let rb = partial_trace(&rho, &[1])?;
    let product = ra.tensor(&rb)?;
    Ok(bipartite_asymmetry(&rho, dims)?.total - bipartite_asymmetry(&product, dims)?.total)
}

/// Closed-form value for a pure state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureQ {
    pub total: f64,
    /// Contribution of either side; both sides are equal for pure states.
    pub per_side: f64,
}

/// `Q = Σ_{i≠j} (2λ_iλ_j/(λ_i+λ_j) + λ_iλ_j)` from the Schmidt coefficients.
pub fn pure_state_q(schmidt: &SchmidtData) -> PureQ {
    let l = schmidt.coefficients();
    let mut unordered = 0.0;
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            let sum = l[i] + l[j];
            if sum < tol::DEGENERACY_FLOOR {
                continue;
            }
            let prod = l[i] * l[j];
            unordered += 2.0 * prod / sum + prod;
        }
    }
    // ordered pairs i ≠ j count every unordered pair twice
    let total = 2.0 * unordered;
    PureQ {
        total,
        per_side: 0.5 * total,
    }
}

/// Closed-form `Q` of a bipartite pure state vector.
pub fn q_pure_from_vector(psi: &CVector, dims: [usize; 2]) -> Result<f64> {
    Ok(pure_state_q(&SchmidtData::from_state(psi, dims)?).total)
}

/// Concurrence `2√(λ_1λ_2)` of a two-qubit pure state.
pub fn concurrence_pure(schmidt: &SchmidtData) -> Result<f64> {
    match schmidt.coefficients() {
        [l1, l2] => Ok((2.0 * (l1 * l2).sqrt()).min(1.0)),
        other => Err(Error::InvalidSchmidt(format!(
            "concurrence needs exactly two coefficients, got {}",
            other.len()
        ))),
    }
}

/// Largest `Q` over pure states whose smaller factor has dimension `d`,
/// attained at `λ_i = 1/d`: `(d² − 1)/d`.
///
/// The often-quoted `(d − 1)/d` is not the maximum of the closed form; see
/// [`printed_pure_q_bound`].
pub fn pure_q_bound(d: usize) -> f64 {
    if d == 0 {
        return 0.0;
    }
    let d = d as f64;
    (d * d - 1.0) / d
}

/// `(d − 1)/d`, kept for comparison with [`pure_q_bound`]. It is exceeded by
/// maximally entangled states for every `d ≥ 2`.
pub fn printed_pure_q_bound(d: usize) -> f64 {
    if d == 0 {
        return 0.0;
    }
    (d as f64 - 1.0) / d as f64
}

/// Two-qubit Bell-diagonal state `I/4 + Σ_i c_i σ_i ⊗ σ_i`.
///
/// In the other common convention, `(I + Σ t_i σ_i ⊗ σ_i)/4`, the parameters
/// are `t_i = 4 c_i`; see [`BellDiagonalParams::from_correlations`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellDiagonalParams {
    c: [f64; 3],
}

impl BellDiagonalParams {
    pub fn new(c: [f64; 3]) -> Result<Self> {
        if c.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let betas = betas_of(c);
        if betas.iter().any(|&b| b < -tol::DEGENERACY_FLOOR) {
            return Err(Error::InvalidBellParameters { betas });
        }
        Ok(Self { c })
    }

    /// From correlation coefficients `t_i = ⟨σ_i ⊗ σ_i⟩`.
    pub fn from_correlations(t: [f64; 3]) -> Result<Self> {
        Self::new([t[0] / 4.0, t[1] / 4.0, t[2] / 4.0])
    }

    /// Werner state `w |Ψ⁻⟩⟨Ψ⁻| + (1 − w) I/4`, valid for `w ∈ [−1/3, 1]`.
    pub fn werner(w: f64) -> Result<Self> {
        Self::new([-w / 4.0; 3])
    }

    pub fn c(&self) -> [f64; 3] {
        self.c
    }

    /// The four eigenvalues `β`.
    pub fn betas(&self) -> [f64; 4] {
        betas_of(self.c)
    }
}

fn betas_of([c1, c2, c3]: [f64; 3]) -> [f64; 4] {
    [
        0.25 - c1 + c2 + c3,
        0.25 + c1 - c2 + c3,
        0.25 + c1 + c2 - c3,
        0.25 - c1 - c2 - c3,
    ]
}

pub fn bell_diagonal_state(params: &BellDiagonalParams) -> DensityMatrix {
    let [c1, c2, c3] = params.c;
    let term = |p: crate::linalg::CMatrix, c: f64| kron(&p, &p).expect("2x2 factors").scale(c);
    let m =
        identity(4).scale(0.25) + term(pauli_x(), c1) + term(pauli_y(), c2) + term(pauli_z(), c3);
    DensityMatrix::new(m, vec![2, 2]).expect("valid parameters give a valid state")
}

/// `Q = ½ (3 − 4 Σ_{i>j} β_iβ_j/(β_i+β_j))`.
pub fn bell_diagonal_q(params: &BellDiagonalParams) -> f64 {
    let b = params.betas().map(|x| x.max(0.0));
    let mut s = 0.0;
    for i in 0..4 {
        for j in 0..i {
            let sum = b[i] + b[j];
            if sum < tol::DEGENERACY_FLOOR {
                continue;
            }
            s += b[i] * b[j] / sum;
        }
    }
    0.5 * (3.0 - 4.0 * s)
}
