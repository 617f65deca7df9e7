//! QFI of a single observable, with SLD and variance cross-checks.

use std::path::Path;

use qfasym_core::linalg::CMatrix;
use qfasym_core::qfi::{qfi, qfi_from_sld, sld, variance};
use qfasym_core::{Complex64, DensityMatrix, Observable};
use serde::Serialize;

use crate::state_file::read_input;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QfiReport {
    pub qfi: f64,
    /// `|¼ Tr(ρL²) − F|`.
    pub sld_residual: f64,
    pub variance: f64,
    pub skipped_pairs: usize,
}

pub fn qfi_report(rho: &DensityMatrix, k: &Observable) -> Result<QfiReport, CliError> {
    if k.dim() != rho.dim() {
        return Err(CliError::Input(format!(
            "observable is {}x{} but the state is {}x{}",
            k.dim(),
            k.dim(),
            rho.dim(),
            rho.dim()
        )));
    }
    let f = qfi(rho, k)?;
    let l = sld(rho, k)?;
    Ok(QfiReport {
        qfi: f.value,
        sld_residual: (qfi_from_sld(rho, &l)? - f.value).abs(),
        variance: variance(rho, k)?,
        skipped_pairs: f.skipped_pairs,
    })
}

/// Hermitian matrix from a JSON file of rows of `[re, im]` pairs.
pub fn observable_from_file(path: &Path) -> Result<Observable, CliError> {
    let rows: Vec<Vec<[f64; 2]>> = serde_json::from_str(&read_input(path)?)?;
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Input(
            "observable must be a non-empty square matrix".into(),
        ));
    }
    let m = CMatrix::from_fn(n, n, |i, j| Complex64::new(rows[i][j][0], rows[i][j][1]));
    Ok(Observable::new(m)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(probs: &[f64], pauli: &str) -> QfiReport {
        let rho = DensityMatrix::diagonal(probs).unwrap();
        qfi_report(&rho, &Observable::from_pauli_string(pauli).unwrap()).unwrap()
    }

    #[test]
    fn documented_values() {
        assert!(run(&[0.5, 0.5], "X").qfi.abs() < 1e-15);
        let pure = run(&[1.0, 0.0], "X");
        assert!((pure.qfi - 1.0).abs() < 1e-12);
        assert!((pure.variance - 1.0).abs() < 1e-12);
        let mixed = run(&[0.75, 0.25], "X");
        assert!((mixed.qfi - 0.25).abs() < 1e-12);
        assert!(mixed.sld_residual < 1e-12);
    }

    #[test]
    fn dimension_mismatch() {
        let rho = DensityMatrix::diagonal(&[0.5, 0.5]).unwrap();
        assert!(qfi_report(&rho, &Observable::from_pauli_string("XZ").unwrap()).is_err());
    }
}
