//! Seeded inputs shared by the benchmarks.

use qfasym_core::generators::gell_mann_basis;
use qfasym_core::linalg::{random_density_matrix, random_hermitian, CMatrix};
use qfasym_core::{DensityMatrix, Observable};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Bipartitions used across benchmarks, from 4 to 16 total dimensions.
pub const PARTITIONS: [[usize; 2]; 4] = [[2, 2], [2, 3], [3, 3], [4, 4]];

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed ^ tag)
}

pub fn hermitian(d: usize) -> CMatrix {
    random_hermitian(d, &mut rng(d as u64))
}

pub fn state(dims: &[usize]) -> DensityMatrix {
    let tag = dims.iter().fold(17u64, |h, &d| h * 31 + d as u64);
    random_density_matrix(dims, None, &mut rng(tag))
}

pub fn basis(d: usize) -> Vec<Observable> {
    gell_mann_basis(d).expect("d > 0").elements().to_vec()
}
