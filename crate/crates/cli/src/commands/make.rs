//! State factories.

use qfasym_core::correlation::{bell_diagonal_state, BellDiagonalParams};
use qfasym_core::linalg::{try_random_density_matrix, CVector};
use qfasym_core::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::state_file::StateFile;
use crate::CliError;

/// `w |Ψ⁻⟩⟨Ψ⁻| + (1 − w) I/4`.
pub fn werner(w: f64) -> Result<StateFile, CliError> {
    let params = BellDiagonalParams::werner(w)?;
    Ok(StateFile::from_density(&bell_diagonal_state(&params)))
}

/// `I/4 + Σ c_i σ_i ⊗ σ_i`.
pub fn bell_diagonal(c: [f64; 3]) -> Result<StateFile, CliError> {
    let params = BellDiagonalParams::new(c)?;
    Ok(StateFile::from_density(&bell_diagonal_state(&params)))
}

/// `Σ_k |k…k⟩ / √d` on `parties` factors of dimension `local_dim`.
pub fn ghz(parties: usize, local_dim: usize) -> Result<StateFile, CliError> {
    if parties < 2 || local_dim < 2 {
        return Err(CliError::Input(
            "ghz needs at least 2 parties of dimension at least 2".into(),
        ));
    }
    let n = u32::try_from(parties)
        .ok()
        .and_then(|p| local_dim.checked_pow(p))
        .ok_or(qfasym_core::Error::SizeOverflow)?;
    // index of |k…k⟩ is k·(1 + d + … + d^{n−1})
    let stride = (n - 1) / (local_dim - 1);
    let amp = Complex64::new(1.0 / (local_dim as f64).sqrt(), 0.0);
    let mut psi = CVector::zeros(n);
    for k in 0..local_dim {
        psi[k * stride] = amp;
    }
    Ok(StateFile::from_pure(&psi, vec![local_dim; parties]))
}

/// Random density matrix of the given rank, deterministic in `seed`.
pub fn random(dims: &[usize], rank: Option<usize>, seed: u64) -> Result<StateFile, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rho = try_random_density_matrix(dims, rank, &mut rng)?;
    Ok(StateFile::from_density(&rho))
}

#[cfg(test)]
mod tests {
    use super::*;
    use qfasym_core::linalg::max_abs;
    use qfasym_core::DensityMatrix;

    #[test]
    fn werner_endpoints() {
        let rho = werner(1.0).unwrap().to_state().unwrap();
        assert!((rho.purity() - 1.0).abs() < 1e-12);
        assert!((rho.matrix()[(1, 2)].re + 0.5).abs() < 1e-12);
        let zero = bell_diagonal([0.0; 3]).unwrap().to_state().unwrap();
        let mixed = DensityMatrix::maximally_mixed(vec![2, 2]);
        assert!(max_abs(&(zero.matrix() - mixed.matrix())) < 1e-15);
    }

    #[test]
    fn invalid_triple_lists_betas() {
        let err = bell_diagonal([0.25, 0.25, 0.25]).unwrap_err().to_string();
        assert!(err.contains("beta"), "{err}");
        assert!(err.contains("-0.5"), "{err}");
    }

    #[test]
    fn ghz_amplitudes() {
        let file = ghz(3, 3).unwrap();
        let StateFile::Pure { dims, data } = &file else {
            panic!()
        };
        assert_eq!(dims, &[3, 3, 3]);
        let nonzero: Vec<usize> = (0..27).filter(|&i| data[i][0] != 0.0).collect();
        assert_eq!(nonzero, [0, 13, 26]);
        assert!(file.to_state().is_ok());
    }

    #[test]
    fn random_is_reproducible() {
        let a = random(&[2, 3], None, 7).unwrap().to_json().unwrap();
        let b = random(&[2, 3], None, 7).unwrap().to_json().unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random(&[2, 3], None, 8).unwrap().to_json().unwrap());
        assert!(random(&[2, 3], Some(7), 0).is_err());
    }
}
