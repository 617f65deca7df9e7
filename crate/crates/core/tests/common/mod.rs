//! Independent reference computations for the integration tests.
//!
//! Nothing here calls into the spectral code paths of the crate under test.

#![allow(dead_code)]

use nalgebra::DMatrix;
use qfasym_core::{CMatrix, Complex64};

/// `Tr_b` and `Tr_a` of a `d_a·d_b` matrix by explicit index summation.
pub fn brute_partial_traces(m: &CMatrix, da: usize, db: usize) -> (CMatrix, CMatrix) {
    let mut ra = CMatrix::zeros(da, da);
    let mut rb = CMatrix::zeros(db, db);
    for i in 0..da {
        for k in 0..da {
            for j in 0..db {
                ra[(i, k)] += m[(i * db + j, k * db + j)];
            }
        }
    }
    for j in 0..db {
        for l in 0..db {
            for i in 0..da {
                rb[(j, l)] += m[(i * db + j, i * db + l)];
            }
        }
    }
    (ra, rb)
}

/// QFI of a full-rank state from the SLD obtained by solving
/// `(ρL + Lρ)/2 = i[K, ρ]` as a dense linear system, then `¼ Tr(ρL²)`.
pub fn lyapunov_qfi(rho: &CMatrix, k: &CMatrix) -> f64 {
    let n = rho.nrows();
    let i = Complex64::new(0.0, 1.0);
    let rhs = (k * rho - rho * k) * i;
    let id = CMatrix::identity(n, n);
    // column-stacking: vec(ρL) = (I ⊗ ρ) vec(L), vec(Lρ) = (ρᵀ ⊗ I) vec(L)
    let sys = (id.kronecker(rho) + rho.transpose().kronecker(&id)).scale(0.5);
    let b = nalgebra::DVector::from_iterator(n * n, rhs.iter().copied());
    let x = sys.lu().solve(&b).expect("full-rank state");
    let l = CMatrix::from_column_slice(n, n, x.as_slice());
    0.25 * (rho * &l * &l).trace().re
}

/// `⟨ψ|K²|ψ⟩ − ⟨ψ|K|ψ⟩²` for a state vector.
pub fn vector_variance(psi: &nalgebra::DVector<Complex64>, k: &CMatrix) -> f64 {
    let kpsi = k * psi;
    let mean = psi.dotc(&kpsi).re;
    kpsi.norm_squared() - mean * mean
}

/// Integer-valued complex matrix for exact arithmetic checks.
pub fn integer_matrix(rows: usize, cols: usize, entries: &[i64]) -> CMatrix {
    CMatrix::from_fn(rows, cols, |r, c| {
        let v = entries[(r * cols + c) % entries.len()];
        Complex64::new(v as f64, ((r + 2 * c) as i64 - v) as f64)
    })
}

pub fn real_identity(n: usize) -> DMatrix<f64> {
    DMatrix::identity(n, n)
}
