//! On-disk state format.
//!
//! ```json
//! {"kind":"density","dims":[2,2],"data":[[[re,im],...],...]}
//! {"kind":"pure","dims":[2,2],"data":[[re,im],...]}
//! ```
//!
//! Density data is row-major; pure data is a flat amplitude vector.

use std::io::Read;
use std::path::Path;

use qfasym_core::linalg::{CMatrix, CVector};
use qfasym_core::{Complex64, DensityMatrix};
use serde::{Deserialize, Serialize};

use crate::{json, CliError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum StateFile {
    Density {
        dims: Vec<usize>,
        data: Vec<Vec<[f64; 2]>>,
    },
    Pure {
        dims: Vec<usize>,
        data: Vec<[f64; 2]>,
    },
}

fn pair(z: &Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn complex([re, im]: [f64; 2]) -> Result<Complex64, CliError> {
    if re.is_finite() && im.is_finite() {
        Ok(Complex64::new(re, im))
    } else {
        Err(qfasym_core::Error::NonFinite.into())
    }
}

impl StateFile {
    pub fn from_density(rho: &DensityMatrix) -> Self {
        let m = rho.matrix();
        let data = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| pair(&m[(i, j)])).collect())
            .collect();
        Self::Density {
            dims: rho.dims().to_vec(),
            data,
        }
    }

    pub fn from_pure(psi: &CVector, dims: Vec<usize>) -> Self {
        Self::Pure {
            dims,
            data: psi.iter().map(pair).collect(),
        }
    }

    pub fn dims(&self) -> &[usize] {
        match self {
            Self::Density { dims, .. } | Self::Pure { dims, .. } => dims,
        }
    }

    /// Validates shape, finiteness and the state conditions, and returns the
    /// density matrix (`|ψ⟩⟨ψ|` for pure files).
    pub fn to_state(&self) -> Result<DensityMatrix, CliError> {
        let dims = self.dims().to_vec();
        let size = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or(qfasym_core::Error::SizeOverflow)?;
        if dims.is_empty() || dims.contains(&0) {
            return Err(CliError::Input(format!(
                "dims {dims:?} must be a non-empty list of positive integers"
            )));
        }
        match self {
            Self::Density { data, .. } => {
                if data.len() != size || data.iter().any(|row| row.len() != size) {
                    return Err(CliError::Input(format!(
                        "density data must be {size}x{size} to match dims {dims:?}"
                    )));
                }
                let mut m = CMatrix::zeros(size, size);
                for (i, row) in data.iter().enumerate() {
                    for (j, &z) in row.iter().enumerate() {
                        m[(i, j)] = complex(z)?;
                    }
                }
                Ok(DensityMatrix::new(m, dims)?)
            }
            Self::Pure { data, .. } => {
                if data.len() != size {
                    return Err(CliError::Input(format!(
                        "pure data has {} amplitudes but dims {dims:?} need {size}",
                        data.len()
                    )));
                }
                let psi = data
                    .iter()
                    .map(|&z| complex(z))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(DensityMatrix::from_pure(&CVector::from_vec(psi), dims)?)
            }
        }
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        json::to_string(self)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Reads from a file, or from stdin when `path` is `-`.
    pub fn read(path: &Path) -> Result<Self, CliError> {
        Self::parse(&read_input(path)?)
    }
}

/// Whole-file read with `-` meaning stdin.
pub fn read_input(path: &Path) -> Result<String, CliError> {
    let name = path.display().to_string();
    if name == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::io("<stdin>", e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::io(name, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qfasym_core::linalg::random_density_matrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn density_round_trip_is_exact() {
        let rho = random_density_matrix(&[2, 3], None, &mut ChaCha8Rng::seed_from_u64(3));
        let file = StateFile::from_density(&rho);
        let back = StateFile::parse(&file.to_json().unwrap()).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_state().unwrap().matrix(), rho.matrix());
    }

    #[test]
    fn pure_file_parses() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let text =
            format!(r#"{{"kind":"pure","dims":[2,2],"data":[[{s},0],[0,0],[0,0],[{s},0]]}}"#);
        let rho = StateFile::parse(&text).unwrap().to_state().unwrap();
        assert!((rho.matrix()[(0, 3)].re - 0.5).abs() < 1e-15);
        assert_eq!(rho.dims(), &[2, 2]);
    }

    #[test]
    fn shape_and_validity_errors() {
        let bad_dims = r#"{"kind":"pure","dims":[2,2],"data":[[1,0],[0,0]]}"#;
        assert!(matches!(
            StateFile::parse(bad_dims).unwrap().to_state(),
            Err(CliError::Input(_))
        ));
        let unnormalized = r#"{"kind":"pure","dims":[2],"data":[[1,0],[1,0]]}"#;
        assert!(matches!(
            StateFile::parse(unnormalized).unwrap().to_state(),
            Err(CliError::Core(qfasym_core::Error::NotNormalized { .. }))
        ));
        let trace = r#"{"kind":"density","dims":[2],"data":[[[1,0],[0,0]],[[0,0],[1,0]]]}"#;
        assert!(matches!(
            StateFile::parse(trace).unwrap().to_state(),
            Err(CliError::Core(qfasym_core::Error::TraceNotOne { .. }))
        ));
        assert!(matches!(
            StateFile::parse("{\"kind\":"),
            Err(CliError::Json(_))
        ));
        assert!(matches!(
            StateFile::parse(r#"{"kind":"mixed","dims":[1],"data":[]}"#),
            Err(CliError::Json(_))
        ));
    }
}
