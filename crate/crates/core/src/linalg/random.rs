//! Seeded sampling of unitaries, states and Hermitian matrices.
//!
//! Every sampler takes the generator explicitly; nothing here touches a
//! global RNG.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::{CMatrix, CVector, DensityMatrix};
use crate::Result;

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

fn ginibre<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    // fill row by row so the draw order does not depend on storage layout
    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        entries.push(complex_gaussian(rng));
    }
    CMatrix::from_row_slice(rows, cols, &entries)
}

/// Haar-distributed `d × d` unitary: QR of a Ginibre matrix with the phases of
/// `R`'s diagonal moved into `Q`.
pub fn random_haar_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> CMatrix {
    let g = ginibre(d, d, rng);
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..d {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 {
            rjj / rjj.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for z in q.column_mut(j).iter_mut() {
            *z *= phase;
        }
    }
    q
}

/// Haar-distributed real orthogonal `n × n` matrix.
pub fn random_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let entries: Vec<f64> = (0..n * n).map(|_| rng.sample(StandardNormal)).collect();
    let g = DMatrix::from_row_slice(n, n, &entries);
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

/// Random state `G G† / Tr(G G†)` with `G` a complex Gaussian
/// `d × rank` matrix; `rank` defaults to the full dimension.
///
/// # Panics
/// If `rank` is zero or exceeds the total dimension, or `dims` is empty.
pub fn random_density_matrix<R: Rng + ?Sized>(
    dims: &[usize],
    rank: Option<usize>,
    rng: &mut R,
) -> DensityMatrix {
    let d: usize = dims.iter().product();
    let k = rank.unwrap_or(d);
    assert!(k >= 1 && k <= d, "rank {k} outside 1..={d}");
    let g = ginibre(d, k, rng);
    let m = &g * g.adjoint();
    let tr = m.trace().re;
    DensityMatrix::new(m.unscale(tr), dims.to_vec()).expect("Gram matrices are valid states")
}

/// Normalized complex Gaussian vector of length `Π dims`.
pub fn random_pure_state<R: Rng + ?Sized>(dims: &[usize], rng: &mut R) -> CVector {
    let d: usize = dims.iter().product();
    let v = CVector::from_iterator(d, (0..d).map(|_| complex_gaussian(rng)));
    let n = v.norm();
    v.unscale(n)
}

/// Random Hermitian matrix `(G + G†)/2` from a Ginibre `G`.
pub fn random_hermitian<R: Rng + ?Sized>(d: usize, rng: &mut R) -> CMatrix {
    let g = ginibre(d, d, rng);
    (&g + g.adjoint()).scale(0.5)
}

/// Like [`random_density_matrix`] but reports bad dimensions or rank as an error.
pub fn try_random_density_matrix<R: Rng + ?Sized>(
    dims: &[usize],
    rank: Option<usize>,
    rng: &mut R,
) -> Result<DensityMatrix> {
    let d: usize = dims.iter().product();
    if dims.is_empty() || d == 0 {
        return Err(crate::Error::InvalidDims {
            dims: dims.to_vec(),
            size: d,
        });
    }
    if let Some(k) = rank {
        if k == 0 || k > d {
            return Err(crate::Error::InvalidParameter {
                name: "rank",
                value: k as f64,
                reason: "rank must lie in 1..=dimension",
            });
        }
    }
    Ok(random_density_matrix(dims, rank, rng))
}
