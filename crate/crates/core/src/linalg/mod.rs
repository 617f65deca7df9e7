//! Dense complex linear algebra: validated state and observable types,
//! Hermitian eigendecomposition, Kronecker products, partial traces and
//! Schmidt coefficients.
//!
//! Storage is nalgebra's column-major `DMatrix`; all index conventions below
//! refer to (row, column) pairs and are independent of the storage order.

mod random;

pub use random::{
    random_density_matrix, random_haar_unitary, random_hermitian, random_orthogonal,
    random_pure_state, try_random_density_matrix,
};

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::tol;
use crate::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn identity(d: usize) -> CMatrix {
    CMatrix::identity(d, d)
}

pub fn pauli_x() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO])
}

pub fn pauli_y() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[ZERO, -I, I, ZERO])
}

pub fn pauli_z() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE])
}

/// Largest entrywise modulus.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

/// Largest entrywise deviation from Hermiticity, `max |M − M†|`.
pub fn hermiticity_deviation(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut dev: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// Largest entrywise deviation of `U†U` from the identity.
pub fn unitarity_deviation(u: &CMatrix) -> f64 {
    if !u.is_square() {
        return f64::INFINITY;
    }
    max_abs(&(u.adjoint() * u - identity(u.nrows())))
}

pub fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

pub fn trace_real(m: &CMatrix) -> f64 {
    m.trace().re
}

fn check_matrix(m: &CMatrix) -> Result<()> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Err(Error::Empty);
    }
    if !m.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}

fn check_square(m: &CMatrix) -> Result<()> {
    check_matrix(m)?;
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    Ok(())
}

fn check_dims(dims: &[usize], size: usize) -> Result<()> {
    if dims.is_empty() || dims.contains(&0) || dims.iter().product::<usize>() != size {
        return Err(Error::InvalidDims {
            dims: dims.to_vec(),
            size,
        });
    }
    Ok(())
}

fn hermitian_part(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()).scale(0.5)
}

/// Spectral decomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors stored as columns, matching `values`.
    pub vectors: CMatrix,
}

impl EigenSystem {
    /// `V diag(values) V†`.
    pub fn reconstruct(&self) -> CMatrix {
        let mut scaled = self.vectors.clone();
        for (j, &v) in self.values.iter().enumerate() {
            scaled.column_mut(j).scale_mut(v);
        }
        scaled * self.vectors.adjoint()
    }

    /// Applies `f` to the spectrum: `V diag(f(values)) V†`.
    pub fn map(&self, f: impl Fn(f64) -> Complex64) -> CMatrix {
        let mut scaled = self.vectors.clone();
        for (j, &v) in self.values.iter().enumerate() {
            let fv = f(v);
            for z in scaled.column_mut(j).iter_mut() {
                *z *= fv;
            }
        }
        scaled * self.vectors.adjoint()
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Eigenvalues come back ascending. Each eigenvector is rotated so that its
/// first non-negligible component is real and positive, which makes the output
/// reproducible for nondegenerate spectra.
pub fn hermitian_eig(m: &CMatrix) -> Result<EigenSystem> {
    check_square(m)?;
    let deviation = hermiticity_deviation(m);
    if deviation > tol::VALIDATION * max_abs(m).max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }
    let eig = SymmetricEigen::new(hermitian_part(m));
    let n = m.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let mut vectors = CMatrix::zeros(n, n);
    let mut values = Vec::with_capacity(n);
    for (dst, &src) in order.iter().enumerate() {
        values.push(eig.eigenvalues[src]);
        let col = eig.eigenvectors.column(src);
        let pivot = col
            .iter()
            .find(|z| z.norm() > 1e-12)
            .copied()
            .unwrap_or(ONE);
        let phase = pivot.conj() / pivot.norm();
        for i in 0..n {
            vectors[(i, dst)] = col[i] * phase;
        }
    }
    Ok(EigenSystem { values, vectors })
}

/// `exp(iθK)` for Hermitian `K`.
pub fn unitary_from_generator(k: &CMatrix, theta: f64) -> Result<CMatrix> {
    let eig = hermitian_eig(k)?;
    Ok(eig.map(|v| Complex64::from_polar(1.0, theta * v)))
}

/// Kronecker product of two matrices.
pub fn kron(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    let rows = a
        .nrows()
        .checked_mul(b.nrows())
        .ok_or(Error::SizeOverflow)?;
    let cols = a
        .ncols()
        .checked_mul(b.ncols())
        .ok_or(Error::SizeOverflow)?;
    rows.checked_mul(cols).ok_or(Error::SizeOverflow)?;
    let (rb, cb) = (b.nrows(), b.ncols());
    Ok(CMatrix::from_fn(rows, cols, |i, j| {
        a[(i / rb, j / cb)] * b[(i % rb, j % cb)]
    }))
}

/// Kronecker product of a list of matrices, left to right.
pub fn kron_all<'a>(factors: impl IntoIterator<Item = &'a CMatrix>) -> Result<CMatrix> {
    let mut acc = CMatrix::from_element(1, 1, ONE);
    for f in factors {
        acc = kron(&acc, f)?;
    }
    Ok(acc)
}

/// Embeds `op` acting on subsystem `slot` into the full space, with identities
/// on every other factor.
pub fn embed(op: &CMatrix, slot: usize, dims: &[usize]) -> Result<CMatrix> {
    if slot >= dims.len() {
        return Err(Error::InvalidSubsystem(format!(
            "slot {slot} out of range for {} subsystems",
            dims.len()
        )));
    }
    if !op.is_square() || op.nrows() != dims[slot] {
        return Err(Error::DimensionMismatch {
            expected: dims[slot],
            found: op.nrows(),
        });
    }
    let left: usize = dims[..slot].iter().product();
    let right: usize = dims[slot + 1..].iter().product();
    kron(&kron(&identity(left), op)?, &identity(right))
}

/// Frobenius norm of `a − b`.
pub fn frobenius_distance(a: &CMatrix, b: &CMatrix) -> f64 {
    (a - b).norm()
}

/// Trace distance `½‖a − b‖₁` of two Hermitian matrices.
pub fn trace_distance(a: &CMatrix, b: &CMatrix) -> Result<f64> {
    let eig = hermitian_eig(&(a - b))?;
    Ok(0.5 * eig.values.iter().map(|v| v.abs()).sum::<f64>())
}

/// A Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable(CMatrix);

impl Observable {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        check_square(&matrix)?;
        let deviation = hermiticity_deviation(&matrix);
        if deviation > tol::VALIDATION {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self(hermitian_part(&matrix)))
    }

    /// Tensor product of Pauli matrices, e.g. `"XZ"` is `σx ⊗ σz`.
    /// `I`, `X`, `Y`, `Z` are accepted in either case.
    pub fn from_pauli_string(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidSubsystem("empty Pauli string".into()));
        }
        let factors = s
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'I' => Ok(identity(2)),
                'X' => Ok(pauli_x()),
                'Y' => Ok(pauli_y()),
                'Z' => Ok(pauli_z()),
                other => Err(Error::InvalidSubsystem(format!(
                    "unknown Pauli symbol {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self(kron_all(&factors)?))
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    /// Hilbert-Schmidt inner product `Tr(A B)`, real for Hermitian operands.
    pub fn hs_inner(&self, other: &Observable) -> f64 {
        // Tr(AB) = Σ_ij A_ij B_ji
        let n = self.dim();
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (self.0[(i, j)] * other.0[(j, i)]).re;
            }
        }
        acc
    }
}

impl AsRef<CMatrix> for Observable {
    fn as_ref(&self) -> &CMatrix {
        &self.0
    }
}

/// A positive semidefinite, unit-trace matrix together with the dimensions of
/// its tensor factors.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: CMatrix,
    dims: Vec<usize>,
}

impl DensityMatrix {
    /// Validates Hermiticity, trace and positivity against
    /// [`tol::VALIDATION`] and stores the Hermitian part of `matrix`.
    pub fn new(matrix: CMatrix, dims: Vec<usize>) -> Result<Self> {
        check_square(&matrix)?;
        check_dims(&dims, matrix.nrows())?;
        let deviation = hermiticity_deviation(&matrix);
        if deviation > tol::VALIDATION {
            return Err(Error::NotHermitian { deviation });
        }
        let matrix = hermitian_part(&matrix);
        let trace = trace_real(&matrix);
        if (trace - 1.0).abs() > tol::VALIDATION {
            return Err(Error::TraceNotOne { trace });
        }
        let min_eigenvalue = hermitian_eig(&matrix)?.values[0];
        if min_eigenvalue < -tol::VALIDATION {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(Self { matrix, dims })
    }

    /// Single-factor state.
    pub fn from_matrix(matrix: CMatrix) -> Result<Self> {
        let n = matrix.nrows();
        Self::new(matrix, vec![n])
    }

    /// `|ψ⟩⟨ψ|`; the vector must be normalized within [`tol::NORM`].
    pub fn from_pure(psi: &CVector, dims: Vec<usize>) -> Result<Self> {
        check_pure(psi)?;
        let m = psi * psi.adjoint();
        Self::new(m, dims)
    }

    pub fn maximally_mixed(dims: Vec<usize>) -> Self {
        let d: usize = dims.iter().product();
        let matrix = identity(d).scale(1.0 / d as f64);
        Self { matrix, dims }
    }

    /// Diagonal state with the given probabilities.
    pub fn diagonal(probs: &[f64]) -> Result<Self> {
        let m = CMatrix::from_diagonal(&CVector::from_iterator(
            probs.len(),
            probs.iter().map(|&p| Complex64::new(p, 0.0)),
        ));
        Self::from_matrix(m)
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    /// Same matrix viewed with a different factorization.
    pub fn with_dims(&self, dims: &[usize]) -> Result<Self> {
        check_dims(dims, self.dim())?;
        Ok(Self {
            matrix: self.matrix.clone(),
            dims: dims.to_vec(),
        })
    }

    /// `self ⊗ other`, with the factor lists concatenated.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<Self> {
        let matrix = kron(&self.matrix, &other.matrix)?;
        let dims = self.dims.iter().chain(&other.dims).copied().collect();
        Ok(Self { matrix, dims })
    }

    /// `U ρ U†`.
    pub fn conjugate(&self, u: &CMatrix) -> Result<Self> {
        if u.nrows() != self.dim() || u.ncols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.nrows(),
            });
        }
        Self::new(u * &self.matrix * u.adjoint(), self.dims.clone())
    }

    /// Convex combination `Σ w_k ρ_k`; weights must be nonnegative and sum to 1.
    pub fn mixture(weights: &[f64], states: &[DensityMatrix]) -> Result<Self> {
        if weights.len() != states.len() || states.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: states.len(),
                found: weights.len(),
            });
        }
        let dims = states[0].dims.clone();
        let mut acc = CMatrix::zeros(states[0].dim(), states[0].dim());
        for (&w, s) in weights.iter().zip(states) {
            if !(0.0..=1.0).contains(&w) {
                return Err(Error::InvalidParameter {
                    name: "weight",
                    value: w,
                    reason: "mixture weights must lie in [0, 1]",
                });
            }
            if s.dims != dims {
                return Err(Error::InvalidDims {
                    dims: s.dims.clone(),
                    size: s.dim(),
                });
            }
            acc += s.matrix.scale(w);
        }
        Self::new(acc, dims)
    }
}

fn check_pure(psi: &CVector) -> Result<()> {
    if psi.is_empty() {
        return Err(Error::Empty);
    }
    if !psi.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let norm = psi.norm();
    if (norm - 1.0).abs() > tol::NORM {
        return Err(Error::NotNormalized { norm });
    }
    Ok(())
}

/// Partial trace keeping the subsystems listed in `keep`.
///
/// The kept factors appear in their original order regardless of the order in
/// `keep`.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let dims = rho.dims();
    if dims.len() < 2 {
        return Err(Error::InvalidSubsystem(
            "partial trace needs at least two subsystems".into(),
        ));
    }
    if keep.is_empty() {
        return Err(Error::InvalidSubsystem("nothing to keep".into()));
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.len() != keep.len() {
        return Err(Error::InvalidSubsystem(format!(
            "duplicate index in {keep:?}"
        )));
    }
    if let Some(&bad) = kept.iter().find(|&&s| s >= dims.len()) {
        return Err(Error::InvalidSubsystem(format!(
            "index {bad} out of range for {} subsystems",
            dims.len()
        )));
    }
    let traced: Vec<usize> = (0..dims.len()).filter(|s| !kept.contains(s)).collect();

    let mut strides = vec![1usize; dims.len()];
    for s in (0..dims.len().saturating_sub(1)).rev() {
        strides[s] = strides[s + 1] * dims[s + 1];
    }
    let offsets = |slots: &[usize]| -> Vec<usize> {
        let mut out = vec![0usize];
        for &s in slots {
            out = out
                .iter()
                .flat_map(|&base| {
                    let stride = strides[s];
                    (0..dims[s]).map(move |k| base + k * stride)
                })
                .collect();
        }
        out
    };
    let kept_off = offsets(&kept);
    let traced_off = offsets(&traced);

    let m = rho.matrix();
    let n = kept_off.len();
    let out = CMatrix::from_fn(n, n, |r, c| {
        traced_off
            .iter()
            .map(|&t| m[(kept_off[r] + t, kept_off[c] + t)])
            .sum()
    });
    let out_dims = kept.iter().map(|&s| dims[s]).collect();
    DensityMatrix::new(out, out_dims)
}

/// Schmidt coefficients (singular values of the `d_a × d_b` coefficient
/// matrix) of a bipartite pure state, in descending order.
pub fn svd_coefficients(psi: &CVector, dims: [usize; 2]) -> Result<Vec<f64>> {
    let [da, db] = dims;
    if da == 0 || db == 0 || da * db != psi.len() {
        return Err(Error::InvalidDims {
            dims: dims.to_vec(),
            size: psi.len(),
        });
    }
    check_pure(psi)?;
    let coeffs = CMatrix::from_fn(da, db, |i, j| psi[i * db + j]);
    let mut sv: Vec<f64> = coeffs
        .svd(false, false)
        .singular_values
        .iter()
        .copied()
        .collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    Ok(sv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell_phi_plus() -> CVector {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        CVector::from_vec(vec![c(s), ZERO, ZERO, c(s)])
    }

    #[test]
    fn eig_identity_and_diagonal() {
        let e = hermitian_eig(&identity(2)).unwrap();
        assert_eq!(e.values, vec![1.0, 1.0]);
        assert!(unitarity_deviation(&e.vectors) < 1e-12);

        let d = CMatrix::from_diagonal(&CVector::from_vec(vec![c(0.75), c(0.25)]));
        let e = hermitian_eig(&d).unwrap();
        assert_abs_diff_eq!(e.values[0], 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(e.values[1], 0.75, epsilon = 1e-15);
    }

    #[test]
    fn eig_pauli_x() {
        let e = hermitian_eig(&pauli_x()).unwrap();
        assert_abs_diff_eq!(e.values[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.values[1], 1.0, epsilon = 1e-14);
        // |−⟩ and |+⟩ with the first component made real positive
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(e.vectors[(0, 0)].re, s, epsilon = 1e-12);
        assert_abs_diff_eq!(e.vectors[(1, 0)].re, -s, epsilon = 1e-12);
        assert_abs_diff_eq!(e.vectors[(0, 1)].re, s, epsilon = 1e-12);
        assert_abs_diff_eq!(e.vectors[(1, 1)].re, s, epsilon = 1e-12);
        assert!((e.reconstruct() - pauli_x()).norm() < 1e-12);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ZERO, ZERO]);
        match hermitian_eig(&m) {
            Err(Error::NotHermitian { deviation }) => assert_abs_diff_eq!(deviation, 1.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn kron_examples() {
        assert_eq!(kron(&identity(2), &identity(2)).unwrap(), identity(4));
        let a = CMatrix::from_diagonal(&CVector::from_vec(vec![c(1.0), c(2.0)]));
        let b = CMatrix::from_diagonal(&CVector::from_vec(vec![c(3.0), c(4.0)]));
        let expected =
            CMatrix::from_diagonal(&CVector::from_vec(vec![c(3.0), c(4.0), c(6.0), c(8.0)]));
        assert_eq!(kron(&a, &b).unwrap(), expected);

        let xx = kron(&pauli_x(), &pauli_x()).unwrap();
        let mut e0 = CVector::zeros(4);
        e0[0] = ONE;
        let out = xx * e0;
        assert_eq!(out[3], ONE);
        assert_eq!(out.iter().filter(|z| z.norm() > 0.0).count(), 1);
    }

    #[test]
    fn kron_overflow_is_an_error() {
        // zero-row operands never allocate, so only the column count overflows
        let wide = CMatrix::zeros(0, usize::MAX / 2 + 1);
        let two = CMatrix::zeros(0, 2);
        assert_eq!(kron(&wide, &two), Err(Error::SizeOverflow));
    }

    #[test]
    fn partial_trace_of_product_and_bell() {
        let ra = DensityMatrix::diagonal(&[0.3, 0.7]).unwrap();
        let rb = DensityMatrix::diagonal(&[0.1, 0.2, 0.7]).unwrap();
        let rab = ra.tensor(&rb).unwrap();
        let back = partial_trace(&rab, &[0]).unwrap();
        assert!((back.matrix() - ra.matrix()).norm() < 1e-12);
        assert_eq!(back.dims(), &[2]);
        let back_b = partial_trace(&rab, &[1]).unwrap();
        assert!((back_b.matrix() - rb.matrix()).norm() < 1e-12);

        let bell = DensityMatrix::from_pure(&bell_phi_plus(), vec![2, 2]).unwrap();
        let marginal = partial_trace(&bell, &[0]).unwrap();
        assert!((marginal.matrix() - identity(2).scale(0.5)).norm() < 1e-12);
    }

    #[test]
    fn partial_trace_errors() {
        let single = DensityMatrix::maximally_mixed(vec![4]);
        assert!(partial_trace(&single, &[0]).is_err());
        let two = DensityMatrix::maximally_mixed(vec![2, 2]);
        assert!(partial_trace(&two, &[]).is_err());
        assert!(partial_trace(&two, &[2]).is_err());
        assert!(partial_trace(&two, &[0, 0]).is_err());
    }

    #[test]
    fn schmidt_coefficients_examples() {
        let mut prod = CVector::zeros(4);
        prod[0] = ONE;
        let sv = svd_coefficients(&prod, [2, 2]).unwrap();
        assert_abs_diff_eq!(sv[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(sv[1], 0.0, epsilon = 1e-14);

        let sv = svd_coefficients(&bell_phi_plus(), [2, 2]).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(sv[0], s, epsilon = 1e-14);
        assert_abs_diff_eq!(sv[1], s, epsilon = 1e-14);

        let psi = CVector::from_vec(vec![c(0.75f64.sqrt()), ZERO, ZERO, c(0.25f64.sqrt())]);
        let sv = svd_coefficients(&psi, [2, 2]).unwrap();
        assert_abs_diff_eq!(sv[0], 0.75f64.sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(sv[1], 0.5, epsilon = 1e-14);
    }

    #[test]
    fn schmidt_rejects_unnormalized() {
        let psi = CVector::from_vec(vec![ONE, ONE, ZERO, ZERO]);
        assert!(matches!(
            svd_coefficients(&psi, [2, 2]),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn density_validation() {
        let not_unit = CMatrix::identity(2, 2);
        assert!(matches!(
            DensityMatrix::from_matrix(not_unit),
            Err(Error::TraceNotOne { .. })
        ));
        let negative = CMatrix::from_diagonal(&CVector::from_vec(vec![c(1.5), c(-0.5)]));
        assert!(matches!(
            DensityMatrix::from_matrix(negative),
            Err(Error::NotPositive { .. })
        ));
        assert!(DensityMatrix::new(identity(4).scale(0.25), vec![2, 3]).is_err());
        let mut nan = identity(2).scale(0.5);
        nan[(0, 1)] = Complex64::new(f64::NAN, 0.0);
        assert_eq!(DensityMatrix::from_matrix(nan), Err(Error::NonFinite));
    }

    #[test]
    fn pauli_strings() {
        let zi = Observable::from_pauli_string("zI").unwrap();
        assert_eq!(zi.matrix(), &kron(&pauli_z(), &identity(2)).unwrap());
        assert!(Observable::from_pauli_string("XQ").is_err());
        assert!(Observable::from_pauli_string("").is_err());
        let y = Observable::from_pauli_string("Y").unwrap();
        assert_abs_diff_eq!(y.hs_inner(&y), 2.0);
    }

    #[test]
    fn matrix_exponential_of_pauli() {
        let u = unitary_from_generator(&pauli_z(), std::f64::consts::FRAC_PI_2).unwrap();
        assert!((u[(0, 0)] - I).norm() < 1e-14);
        assert!((u[(1, 1)] + I).norm() < 1e-14);
    }
}
